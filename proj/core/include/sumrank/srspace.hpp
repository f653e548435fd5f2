#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sumrank/ffalg.hpp"

namespace sumrank {

using IntVector = std::vector<int>;

enum class SupportKind { Row, Column };

const char* to_string(SupportKind kind) noexcept;

// Length n split into ell blocks of length eta over GF(q^m).
struct SumRankParams {
    int n = 0;
    int ell = 0;
    int eta = 0;
    int m = 0;

    int mu() const noexcept { return eta < m ? eta : m; }
    // Ambient dimension of one support block.
    int zeta(SupportKind kind) const noexcept { return kind == SupportKind::Row ? eta : m; }

    friend bool operator==(const SumRankParams&, const SumRankParams&) = default;
};

// Throws InvalidParams unless n, ell, m > 0 and ell | n.
SumRankParams make_params(int n, int ell, int m);

struct BlockVector {
    SumRankParams params;
    ElemVector entries;

    BlockVector() = default;
    explicit BlockVector(const SumRankParams& p) : params(p), entries(static_cast<std::size_t>(p.n), 0) {}
    BlockVector(const SumRankParams& p, ElemVector e);

    std::span<const Elem> block(int i) const
    {
        return {entries.data() + static_cast<std::size_t>(i) * params.eta, static_cast<std::size_t>(params.eta)};
    }
    std::span<Elem> block(int i)
    {
        return {entries.data() + static_cast<std::size_t>(i) * params.eta, static_cast<std::size_t>(params.eta)};
    }

    friend bool operator==(const BlockVector& a, const BlockVector& b) { return a.entries == b.entries && a.params == b.params; }
};

struct WeightDecomposition {
    IntVector t;

    int total() const noexcept
    {
        int s = 0;
        for (int v : t) s += v;
        return s;
    }
    friend bool operator==(const WeightDecomposition&, const WeightDecomposition&) = default;
};

// e_i = a_i * B_i for every block.
struct ErrorDecomposition {
    std::vector<ElemVector> a;
    std::vector<FqMatrix> b;
};

struct SumRankSupport {
    SupportKind kind = SupportKind::Row;
    int zeta = 0;
    std::vector<FqMatrix> bases; // RREF, one per block, full row rank

    int ell() const noexcept { return static_cast<int>(bases.size()); }
    IntVector dims() const;
    int weight() const noexcept;

    friend bool operator==(const SumRankSupport&, const SumRankSupport&) = default;
};

int rank_weight(const FieldContext& ctx, std::span<const Elem> x);
int hamming_weight(std::span<const Elem> x);
WeightDecomposition weight_decomposition(const FieldContext& ctx, const BlockVector& x);
int sum_rank_weight(const FieldContext& ctx, const BlockVector& x);

ErrorDecomposition error_decomposition(const FieldContext& ctx, const BlockVector& e);
BlockVector reassemble(const FieldContext& ctx, const SumRankParams& params, const ErrorDecomposition& d);

SumRankSupport row_support(const FieldContext& ctx, const BlockVector& e);
SumRankSupport column_support(const FieldContext& ctx, const BlockVector& e);
SumRankSupport support_of(const FieldContext& ctx, const BlockVector& e, SupportKind kind);

// E_i subset of F_i for all blocks. Throws KindMismatch / InvalidShape.
bool support_contains(const FieldContext& ctx, const SumRankSupport& f, const SumRankSupport& e);

} // namespace sumrank
