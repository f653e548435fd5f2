#pragma once

#include "sumrank/counting.hpp"
#include "sumrank/ffalg.hpp"
#include "sumrank/rng.hpp"
#include "sumrank/srspace.hpp"

namespace sumrank {

Elem uniform_element(const FiniteField& f, Rng& rng);

// Uniform over full-row-rank rows x cols matrices over f. Throws InvalidShape.
FqMatrix sample_full_rank_matrix(int rows, int cols, const FiniteField& f, Rng& rng);

// Uniform over length-len vectors over GF(q^m) with GF(q)-rank len.
ElemVector sample_full_rank_vector(int len, const FieldContext& ctx, Rng& rng);

// Uniform dim-dimensional subspace of GF(q)^zeta, as an RREF basis.
FqMatrix sample_uniform_subspace(int dim, int zeta, const FiniteField& f, Rng& rng);

// Weight decomposition of a uniform vector of sum-rank weight t.
WeightDecomposition sample_uniform_decomposition(int t, const SumRankParams& params, const SphereTable& table, Rng& rng);

// Uniform over {e : wt_SR(e) = t}. The table, when given, must cover (t, ell).
BlockVector sample_uniform_error(int t, const SumRankParams& params, const FieldContext& ctx, Rng& rng,
                                 const SphereTable* table = nullptr);

// Uniform error with the given weight decomposition.
BlockVector sample_error_with_decomposition(const WeightDecomposition& d, const SumRankParams& params,
                                            const FieldContext& ctx, Rng& rng);

} // namespace sumrank
