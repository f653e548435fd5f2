#include "sumrank/srspace.hpp"

namespace sumrank {

const char* to_string(SupportKind kind) noexcept
{
    return kind == SupportKind::Row ? "row" : "column";
}

SumRankParams make_params(int n, int ell, int m)
{
    if (n <= 0 || ell <= 0 || m <= 0)
        throw Error(ErrorCode::InvalidParams, "n, ell and m must be positive");
    if (n % ell != 0) throw Error(ErrorCode::InvalidParams, "ell must divide n");
    return SumRankParams{n, ell, n / ell, m};
}

BlockVector::BlockVector(const SumRankParams& p, ElemVector e) : params(p), entries(std::move(e))
{
    if (entries.size() != static_cast<std::size_t>(p.n))
        throw Error(ErrorCode::DimensionMismatch, "vector length does not match n");
}

IntVector SumRankSupport::dims() const
{
    IntVector d;
    d.reserve(bases.size());
    for (const auto& b : bases) d.push_back(static_cast<int>(b.rows()));
    return d;
}

int SumRankSupport::weight() const noexcept
{
    int w = 0;
    for (const auto& b : bases) w += static_cast<int>(b.rows());
    return w;
}

int rank_weight(const FieldContext& ctx, std::span<const Elem> x)
{
    return static_cast<int>(rank(ctx.base(), expand(ctx, x)));
}

int hamming_weight(std::span<const Elem> x)
{
    int w = 0;
    for (Elem v : x) w += v != 0;
    return w;
}

WeightDecomposition weight_decomposition(const FieldContext& ctx, const BlockVector& x)
{
    WeightDecomposition d;
    d.t.reserve(static_cast<std::size_t>(x.params.ell));
    for (int i = 0; i < x.params.ell; ++i) d.t.push_back(rank_weight(ctx, x.block(i)));
    return d;
}

int sum_rank_weight(const FieldContext& ctx, const BlockVector& x)
{
    return weight_decomposition(ctx, x).total();
}

ErrorDecomposition error_decomposition(const FieldContext& ctx, const BlockVector& e)
{
    ErrorDecomposition d;
    for (int i = 0; i < e.params.ell; ++i) {
        auto blk = e.block(i);
        FqMatrix x = expand(ctx, blk);
        auto piv = rref_in_place(ctx.base(), x);
        FqMatrix b = x.block(0, piv.size(), 0, x.cols());
        // B is in RREF, so the coefficient on basis row j is the entry at its pivot.
        ElemVector a(piv.size());
        for (std::size_t j = 0; j < piv.size(); ++j) a[j] = blk[piv[j]];
        d.a.push_back(std::move(a));
        d.b.push_back(std::move(b));
    }
    return d;
}

BlockVector reassemble(const FieldContext& ctx, const SumRankParams& params, const ErrorDecomposition& d)
{
    if (d.a.size() != static_cast<std::size_t>(params.ell) || d.b.size() != d.a.size())
        throw Error(ErrorCode::DimensionMismatch, "decomposition has wrong block count");
    const FiniteField& f = ctx.ext();
    BlockVector e(params);
    for (int i = 0; i < params.ell; ++i) {
        const auto& a = d.a[i];
        const auto& b = d.b[i];
        if (b.rows() != a.size() || (b.rows() > 0 && b.cols() != static_cast<std::size_t>(params.eta)))
            throw Error(ErrorCode::DimensionMismatch, "decomposition block shape mismatch");
        auto out = e.block(i);
        for (std::size_t j = 0; j < a.size(); ++j)
            for (int c = 0; c < params.eta; ++c)
                if (b(j, c) != 0) out[c] = f.add(out[c], f.mul(a[j], ctx.embed(b(j, c))));
    }
    return e;
}

SumRankSupport row_support(const FieldContext& ctx, const BlockVector& e)
{
    SumRankSupport s;
    s.kind = SupportKind::Row;
    s.zeta = e.params.eta;
    for (int i = 0; i < e.params.ell; ++i) {
        FqMatrix b = row_space_basis(ctx.base(), expand(ctx, e.block(i)));
        if (b.rows() == 0) b = FqMatrix(0, static_cast<std::size_t>(s.zeta));
        s.bases.push_back(std::move(b));
    }
    return s;
}

SumRankSupport column_support(const FieldContext& ctx, const BlockVector& e)
{
    SumRankSupport s;
    s.kind = SupportKind::Column;
    s.zeta = static_cast<int>(ctx.m());
    for (int i = 0; i < e.params.ell; ++i) {
        FqMatrix b = row_space_basis(ctx.base(), expand(ctx, e.block(i)).transpose());
        if (b.rows() == 0) b = FqMatrix(0, static_cast<std::size_t>(s.zeta));
        s.bases.push_back(std::move(b));
    }
    return s;
}

SumRankSupport support_of(const FieldContext& ctx, const BlockVector& e, SupportKind kind)
{
    return kind == SupportKind::Row ? row_support(ctx, e) : column_support(ctx, e);
}

bool support_contains(const FieldContext& ctx, const SumRankSupport& f, const SumRankSupport& e)
{
    if (f.kind != e.kind) throw Error(ErrorCode::KindMismatch, "supports of different kinds");
    if (f.zeta != e.zeta || f.bases.size() != e.bases.size())
        throw Error(ErrorCode::InvalidShape, "supports of different shapes");
    for (std::size_t i = 0; i < f.bases.size(); ++i) {
        const FqMatrix& fi = f.bases[i];
        const FqMatrix& ei = e.bases[i];
        if (ei.rows() == 0) continue;
        if (ei.rows() > fi.rows()) return false;
        FqMatrix stacked(0, static_cast<std::size_t>(f.zeta));
        for (std::size_t r = 0; r < fi.rows(); ++r) stacked.append_row(fi.row(r));
        for (std::size_t r = 0; r < ei.rows(); ++r) stacked.append_row(ei.row(r));
        if (rank(ctx.base(), stacked) != fi.rows()) return false;
    }
    return true;
}

} // namespace sumrank
