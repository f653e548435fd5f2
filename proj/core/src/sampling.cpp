#include "sumrank/sampling.hpp"

#include <optional>

namespace sumrank {

Elem uniform_element(const FiniteField& f, Rng& rng) { return rng.below(f.order()); }

FqMatrix sample_full_rank_matrix(int rows, int cols, const FiniteField& f, Rng& rng)
{
    if (rows < 0 || cols < 0 || rows > cols) throw Error(ErrorCode::InvalidShape, "rows must not exceed cols");
    const auto r = static_cast<std::size_t>(rows), c = static_cast<std::size_t>(cols);
    for (;;) {
        FqMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = uniform_element(f, rng);
        if (rank(f, m) == r) return m;
    }
}

ElemVector sample_full_rank_vector(int len, const FieldContext& ctx, Rng& rng)
{
    if (len < 0 || len > static_cast<int>(ctx.m()))
        throw Error(ErrorCode::InvalidShape, "vector length exceeds m");
    for (;;) {
        ElemVector v(static_cast<std::size_t>(len));
        for (auto& x : v) x = uniform_element(ctx.ext(), rng);
        if (rank_weight(ctx, v) == len) return v;
    }
}

FqMatrix sample_uniform_subspace(int dim, int zeta, const FiniteField& f, Rng& rng)
{
    if (dim < 0 || zeta < 0 || dim > zeta) throw Error(ErrorCode::InvalidShape, "dim must not exceed zeta");
    FqMatrix m = sample_full_rank_matrix(dim, zeta, f, rng);
    rref_in_place(f, m);
    return m;
}

WeightDecomposition sample_uniform_decomposition(int t, const SumRankParams& params, const SphereTable& table, Rng& rng)
{
    const int ell = params.ell, mu = params.mu();
    if (t < 0 || t > mu * ell) throw Error(ErrorCode::InvalidWeight, "t exceeds mu * ell");
    BigInt d = rng.below(table.at(t, ell));
    WeightDecomposition out;
    int rem = t;
    for (int j = 1; j <= ell; ++j) {
        const int lo = std::max(0, rem - mu * (ell - j));
        const int hi = std::min(mu, rem);
        int chosen = -1;
        for (int tj = lo; tj <= hi; ++tj) {
            const BigInt& rest = table.at(rem - tj, ell - j);
            BigInt w = table.block_count(tj) * rest;
            if (d < w) {
                chosen = tj;
                d %= rest;
                break;
            }
            d -= w;
        }
        if (chosen < 0) throw Error(ErrorCode::InvalidParams, "enumerative walk fell off the table");
        out.t.push_back(chosen);
        rem -= chosen;
    }
    return out;
}

BlockVector sample_error_with_decomposition(const WeightDecomposition& d, const SumRankParams& params,
                                            const FieldContext& ctx, Rng& rng)
{
    if (d.t.size() != static_cast<std::size_t>(params.ell))
        throw Error(ErrorCode::DimensionMismatch, "decomposition length must equal ell");
    ErrorDecomposition parts;
    for (int tj : d.t) {
        if (tj < 0 || tj > params.mu()) throw Error(ErrorCode::InvalidWeight, "block weight exceeds mu");
        parts.a.push_back(sample_full_rank_vector(tj, ctx, rng));
        parts.b.push_back(sample_full_rank_matrix(tj, params.eta, ctx.base(), rng));
    }
    return reassemble(ctx, params, parts);
}

BlockVector sample_uniform_error(int t, const SumRankParams& params, const FieldContext& ctx, Rng& rng,
                                 const SphereTable* table)
{
    if (t < 0 || t > params.mu() * params.ell) throw Error(ErrorCode::InvalidWeight, "t exceeds mu * ell");
    std::optional<SphereTable> local;
    if (!table || table->t_max() < t || table->ell_max() < params.ell) {
        local.emplace(ctx.q(), params.eta, params.m, t, params.ell);
        table = &*local;
    }
    return sample_error_with_decomposition(sample_uniform_decomposition(t, params, *table, rng), params, ctx, rng);
}

} // namespace sumrank
