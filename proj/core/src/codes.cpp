#include "sumrank/codes.hpp"

#include <cmath>
#include <functional>

#include "sumrank/sampling.hpp"

namespace sumrank {

const char* to_string(ErasureStatus status) noexcept
{
    switch (status) {
    case ErasureStatus::Success: return "success";
    case ErasureStatus::NonUnique: return "nonunique";
    case ErasureStatus::NoSolution: return "nosolution";
    }
    return "unknown";
}

LinearCode code_from_generator(FqmMatrix G, const SumRankParams& params, const FieldContext& ctx)
{
    if (G.cols() != static_cast<std::size_t>(params.n))
        throw Error(ErrorCode::InvalidDims, "generator width must equal n");
    const std::size_t k = rank(ctx.ext(), G);
    if (k != G.rows() || k == 0 || k >= G.cols()) throw Error(ErrorCode::InvalidDims, "generator must have full rank 0 < k < n");
    FqmMatrix H = right_kernel(ctx.ext(), G);
    return LinearCode{ctx, params, static_cast<int>(k), std::move(G), std::move(H)};
}

LinearCode code_from_parity_check(FqmMatrix H, const SumRankParams& params, const FieldContext& ctx)
{
    if (H.cols() != static_cast<std::size_t>(params.n))
        throw Error(ErrorCode::InvalidDims, "parity-check width must equal n");
    const std::size_t r = rank(ctx.ext(), H);
    if (r != H.rows() || r == 0 || r >= H.cols())
        throw Error(ErrorCode::InvalidDims, "parity-check matrix must have full rank 0 < n-k < n");
    FqmMatrix G = right_kernel(ctx.ext(), H);
    const int k = static_cast<int>(G.rows());
    return LinearCode{ctx, params, k, std::move(G), std::move(H)};
}

LinearCode random_code(int k, const SumRankParams& params, const FieldContext& ctx, Rng& rng)
{
    if (k <= 0 || k >= params.n) throw Error(ErrorCode::InvalidDims, "need 0 < k < n");
    const auto rows = static_cast<std::size_t>(k), cols = static_cast<std::size_t>(params.n);
    for (;;) {
        FqmMatrix G(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) G(i, j) = uniform_element(ctx.ext(), rng);
        if (rank(ctx.ext(), G) == rows) return code_from_generator(std::move(G), params, ctx);
    }
}

ElemVector syndrome(const FieldContext& ctx, const FqmMatrix& H, std::span<const Elem> x)
{
    return multiply(ctx.ext(), H, x);
}

BlockVector encode(const LinearCode& code, std::span<const Elem> message)
{
    if (message.size() != static_cast<std::size_t>(code.k))
        throw Error(ErrorCode::DimensionMismatch, "message length must equal k");
    return BlockVector(code.params, multiply(code.ctx.ext(), code.G.transpose(), message));
}

BlockVector random_codeword(const LinearCode& code, Rng& rng)
{
    ElemVector msg(static_cast<std::size_t>(code.k));
    for (auto& x : msg) x = uniform_element(code.ctx.ext(), rng);
    return encode(code, msg);
}

int min_distance_bruteforce(const LinearCode& code, std::uint64_t budget)
{
    const FieldContext& ctx = code.ctx;
    const double bits = static_cast<double>(ctx.m()) * code.k * std::log2(static_cast<double>(ctx.q()));
    if (bits > std::log2(static_cast<double>(budget)) + 1e-9)
        throw Error(ErrorCode::TooLarge, "q^{mk} exceeds the enumeration budget");
    // Codewords are the GF(q)-combinations of a^u * g_j.
    std::vector<ElemVector> gens;
    for (int j = 0; j < code.k; ++j)
        for (unsigned u = 0; u < ctx.m(); ++u) {
            const Elem a = ctx.basis_element(u);
            ElemVector v(static_cast<std::size_t>(code.n()));
            for (int c = 0; c < code.n(); ++c) v[c] = ctx.ext().mul(a, code.G(j, c));
            gens.push_back(std::move(v));
        }
    const FiniteField& f = ctx.ext();
    const std::uint64_t q = ctx.q();
    int best = code.params.mu() * code.params.ell + 1;
    std::vector<ElemVector> acc(gens.size() + 1, ElemVector(static_cast<std::size_t>(code.n()), 0));
    bool any = false;
    std::function<void(std::size_t, bool)> rec = [&](std::size_t g, bool nonzero) {
        if (g == gens.size()) {
            if (!nonzero) return;
            any = true;
            BlockVector bv(code.params, acc[g]);
            best = std::min(best, sum_rank_weight(ctx, bv));
            return;
        }
        for (Elem c = 0; c < q; ++c) {
            auto& next = acc[g + 1];
            for (std::size_t i = 0; i < next.size(); ++i)
                next[i] = c == 0 ? acc[g][i] : f.add(acc[g][i], f.mul(c, gens[g][i]));
            rec(g + 1, nonzero || c != 0);
        }
    };
    rec(0, false);
    return any ? best : 0;
}

ErasureResult column_erasure_decode(const FieldContext& ctx, const SumRankParams& params, const FqmMatrix& H,
                                    const BlockVector& r, const SumRankSupport& f)
{
    if (f.kind != SupportKind::Row) throw Error(ErrorCode::KindMismatch, "column erasure decoding needs a row support");
    if (f.zeta != params.eta || f.ell() != params.ell) throw Error(ErrorCode::InvalidShape, "support shape mismatch");
    if (H.cols() != static_cast<std::size_t>(params.n)) throw Error(ErrorCode::DimensionMismatch, "H width mismatch");
    const FiniteField& fe = ctx.ext();
    const int sp = f.weight();
    // Columns of H B^T, one per basis vector of every block.
    FqmMatrix hb(H.rows(), static_cast<std::size_t>(sp));
    int col = 0;
    for (int i = 0; i < params.ell; ++i) {
        const FqMatrix& b = f.bases[i];
        for (std::size_t j = 0; j < b.rows(); ++j, ++col)
            for (std::size_t row = 0; row < H.rows(); ++row) {
                Elem acc = 0;
                for (int c = 0; c < params.eta; ++c) {
                    const Elem bc = b(j, c);
                    if (bc != 0) acc = fe.add(acc, fe.mul(H(row, i * params.eta + c), ctx.embed(bc)));
                }
                hb(row, col) = acc;
            }
    }
    ElemVector syn = syndrome(ctx, H, r.entries);
    SolveResult sol = solve_linear(fe, hb, syn);
    ErasureResult out;
    if (sol.status == SolveResult::Status::NoSolution) return out;
    if (sol.status == SolveResult::Status::NonUnique) {
        out.status = ErasureStatus::NonUnique;
        return out;
    }
    ErrorDecomposition parts;
    col = 0;
    for (int i = 0; i < params.ell; ++i) {
        const std::size_t d = f.bases[i].rows();
        parts.a.emplace_back(sol.x.begin() + col, sol.x.begin() + col + d);
        parts.b.push_back(f.bases[i]);
        col += static_cast<int>(d);
    }
    out.status = ErasureStatus::Success;
    out.e = reassemble(ctx, params, parts);
    return out;
}

ErasureResult row_erasure_decode(const FieldContext& ctx, const SumRankParams& params, const FqmMatrix& H,
                                 const BlockVector& r, const SumRankSupport& f)
{
    if (f.kind != SupportKind::Column) throw Error(ErrorCode::KindMismatch, "row erasure decoding needs a column support");
    if (f.zeta != static_cast<int>(ctx.m()) || f.ell() != params.ell)
        throw Error(ErrorCode::InvalidShape, "support shape mismatch");
    if (H.cols() != static_cast<std::size_t>(params.n)) throw Error(ErrorCode::DimensionMismatch, "H width mismatch");
    const FiniteField& fe = ctx.ext();
    const unsigned m = ctx.m();
    const int eta = params.eta;

    std::vector<ElemVector> lifted(static_cast<std::size_t>(params.ell));
    std::size_t unknowns = 0;
    for (int i = 0; i < params.ell; ++i) {
        const FqMatrix& b = f.bases[i];
        for (std::size_t j = 0; j < b.rows(); ++j) lifted[i].push_back(ctx.from_coordinates(b.row(j)));
        unknowns += b.rows() * static_cast<std::size_t>(eta);
    }
    // Rows indexed r*m + u, unknowns ordered (block, basis row, column).
    FqMatrix big(H.rows() * m, unknowns);
    std::size_t var = 0;
    for (int i = 0; i < params.ell; ++i)
        for (std::size_t j = 0; j < lifted[i].size(); ++j)
            for (int c = 0; c < eta; ++c, ++var)
                for (std::size_t row = 0; row < H.rows(); ++row) {
                    const Elem coeff = fe.mul(H(row, static_cast<std::size_t>(i) * eta + c), lifted[i][j]);
                    if (coeff == 0) continue;
                    ElemVector co = ctx.coordinates(coeff);
                    for (unsigned u = 0; u < m; ++u) big(row * m + u, var) = co[u];
                }
    ElemVector syn = syndrome(ctx, H, r.entries);
    ElemVector rhs(H.rows() * m);
    for (std::size_t row = 0; row < H.rows(); ++row) {
        ElemVector co = ctx.coordinates(syn[row]);
        for (unsigned u = 0; u < m; ++u) rhs[row * m + u] = co[u];
    }
    SolveResult sol = solve_linear(ctx.base(), big, rhs);
    ErasureResult out;
    if (sol.status == SolveResult::Status::NoSolution) return out;
    if (sol.status == SolveResult::Status::NonUnique) {
        out.status = ErasureStatus::NonUnique;
        return out;
    }
    ErrorDecomposition parts;
    var = 0;
    for (int i = 0; i < params.ell; ++i) {
        const std::size_t d = lifted[i].size();
        FqMatrix b(d, static_cast<std::size_t>(eta));
        for (std::size_t j = 0; j < d; ++j)
            for (int c = 0; c < eta; ++c) b(j, c) = sol.x[var++];
        parts.a.push_back(lifted[i]);
        parts.b.push_back(std::move(b));
    }
    out.status = ErasureStatus::Success;
    out.e = reassemble(ctx, params, parts);
    return out;
}

ErasureResult erasure_decode(const FieldContext& ctx, const SumRankParams& params, const FqmMatrix& H,
                             const BlockVector& r, const SumRankSupport& f)
{
    return f.kind == SupportKind::Row ? column_erasure_decode(ctx, params, H, r, f)
                                      : row_erasure_decode(ctx, params, H, r, f);
}

} // namespace sumrank
