#pragma once

#include <cstdint>
#include <iosfwd>

#include "sumrank/ffalg.hpp"
#include "sumrank/rng.hpp"
#include "sumrank/srspace.hpp"

namespace sumrank {

// GF(q^m)-linear [n, k] code with generator G and parity-check matrix H.
struct LinearCode {
    FieldContext ctx;
    SumRankParams params;
    int k = 0;
    FqmMatrix G;
    FqmMatrix H;

    int n() const noexcept { return params.n; }
    int redundancy() const noexcept { return params.n - k; }
};

// G uniform among full-rank k x n matrices; H a kernel basis. Throws InvalidDims unless 0 < k < n.
LinearCode random_code(int k, const SumRankParams& params, const FieldContext& ctx, Rng& rng);
LinearCode code_from_generator(FqmMatrix G, const SumRankParams& params, const FieldContext& ctx);
LinearCode code_from_parity_check(FqmMatrix H, const SumRankParams& params, const FieldContext& ctx);

ElemVector syndrome(const FieldContext& ctx, const FqmMatrix& H, std::span<const Elem> x);
BlockVector random_codeword(const LinearCode& code, Rng& rng);
BlockVector encode(const LinearCode& code, std::span<const Elem> message);

// Minimum sum-rank distance by enumerating all q^{mk} codewords. Throws TooLarge past the budget.
int min_distance_bruteforce(const LinearCode& code, std::uint64_t budget = 1ULL << 22);

enum class ErasureStatus { Success, NonUnique, NoSolution };
const char* to_string(ErasureStatus status) noexcept;

struct ErasureResult {
    ErasureStatus status = ErasureStatus::NoSolution;
    BlockVector e;

    bool ok() const noexcept { return status == ErasureStatus::Success; }
};

// F is a row super-support (blocks are subspaces of GF(q)^eta).
ErasureResult column_erasure_decode(const FieldContext& ctx, const SumRankParams& params, const FqmMatrix& H,
                                    const BlockVector& r, const SumRankSupport& f);
// F is a column super-support (blocks are subspaces of GF(q)^m).
ErasureResult row_erasure_decode(const FieldContext& ctx, const SumRankParams& params, const FqmMatrix& H,
                                 const BlockVector& r, const SumRankSupport& f);
// Dispatches on f.kind.
ErasureResult erasure_decode(const FieldContext& ctx, const SumRankParams& params, const FqmMatrix& H,
                             const BlockVector& r, const SumRankSupport& f);

// Text format: header line "q m n k ell", a blank line, then the n-k rows of H.
void write_code(std::ostream& os, const LinearCode& code);
LinearCode read_code(std::istream& is);
void write_vector(std::ostream& os, std::span<const Elem> v);
ElemVector read_vector(std::istream& is, std::size_t n);

} // namespace sumrank
