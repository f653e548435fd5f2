#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "sumrank/codes.hpp"
#include "sumrank/counting.hpp"
#include "sumrank/sampling.hpp"

using namespace sumrank;

namespace {

bool is_zero(const ElemVector& v)
{
    return std::all_of(v.begin(), v.end(), [](Elem x) { return x == 0; });
}

// Grows each block of f by random vectors until the total dimension is s.
SumRankSupport enlarge(const FieldContext& ctx, SumRankSupport f, int s, Rng& rng)
{
    while (f.weight() < s) {
        const std::size_t b = rng.below(f.bases.size());
        FqMatrix& basis = f.bases[b];
        if (static_cast<int>(basis.rows()) == f.zeta) continue;
        FqMatrix grown = basis.rows() ? basis : FqMatrix(0, static_cast<std::size_t>(f.zeta));
        ElemVector v(static_cast<std::size_t>(f.zeta));
        for (auto& x : v) x = uniform_element(ctx.base(), rng);
        grown.append_row(v);
        basis = row_space_basis(ctx.base(), grown);
    }
    return f;
}

int oracle_min_distance(const LinearCode& code)
{
    int best = code.n() + 1;
    oracle::for_each_vector(static_cast<std::size_t>(code.n()), code.ctx.ext().order(), [&](const ElemVector& v) {
        if (is_zero(v) || !is_zero(syndrome(code.ctx, code.H, v))) return;
        best = std::min(best, oracle::sum_rank_weight(code.ctx, v, code.params.ell));
    });
    return best;
}

} // namespace

TEST_CASE("random codes have consistent generator and parity-check matrices")
{
    auto ctx = make_field(2, 3);
    auto p = make_params(6, 2, 3);
    Rng rng(1);
    for (int k = 1; k < 6; ++k) {
        LinearCode c = random_code(k, p, ctx, rng);
        CHECK(c.G.rows() == static_cast<std::size_t>(k));
        CHECK(c.H.rows() == static_cast<std::size_t>(6 - k));
        CHECK(rank(ctx.ext(), c.G) == static_cast<std::size_t>(k));
        CHECK(rank(ctx.ext(), c.H) == static_cast<std::size_t>(6 - k));
        const FqmMatrix gh = multiply(ctx.ext(), c.G, c.H.transpose());
        for (Elem v : gh.data()) CHECK(v == 0);
        BlockVector cw = random_codeword(c, rng);
        CHECK(is_zero(syndrome(ctx, c.H, cw.entries)));
    }
    CHECK_THROWS_AS(random_code(0, p, ctx, rng), Error);
    CHECK_THROWS_AS(random_code(6, p, ctx, rng), Error);
}

TEST_CASE("from generator and from parity check describe the same code")
{
    auto ctx = make_field(3, 2);
    auto p = make_params(4, 2, 2);
    Rng rng(2);
    LinearCode c = random_code(2, p, ctx, rng);
    LinearCode g = code_from_generator(c.G, p, ctx);
    LinearCode h = code_from_parity_check(c.H, p, ctx);
    CHECK(row_space_basis(ctx.ext(), g.H) == row_space_basis(ctx.ext(), c.H));
    CHECK(row_space_basis(ctx.ext(), h.G) == row_space_basis(ctx.ext(), c.G));
    ElemVector msg{1, 5};
    CHECK(is_zero(syndrome(ctx, c.H, encode(c, msg).entries)));
    ElemVector bad{1};
    CHECK_THROWS_AS(encode(c, bad), Error);
}

TEST_CASE("minimum distance matches exhaustive search")
{
    for (auto [q, m, n, ell, k] : {std::tuple{2u, 2u, 4, 2, 1}, {2, 2, 4, 2, 2}, {2, 2, 4, 4, 2}, {2, 3, 3, 1, 1},
                                   {3, 1, 4, 2, 2}, {2, 2, 4, 1, 1}}) {
        auto ctx = make_field(q, m);
        auto p = make_params(n, ell, static_cast<int>(m));
        Rng rng(q + m + static_cast<unsigned>(n + ell + k));
        for (int trial = 0; trial < 3; ++trial) {
            LinearCode c = random_code(k, p, ctx, rng);
            CHECK(min_distance_bruteforce(c) == oracle_min_distance(c));
        }
    }
    auto ctx = make_field(2, 8);
    Rng rng(3);
    LinearCode big = random_code(3, make_params(6, 2, 8), ctx, rng);
    CHECK_THROWS_AS(min_distance_bruteforce(big), Error);
}

TEST_CASE("erasure decoders recover planted errors from super-supports")
{
    for (auto [q, m, n, ell, k] : {std::tuple{2u, 4u, 6, 2, 2}, {2, 3, 6, 3, 2}, {3, 2, 6, 2, 2}, {2, 6, 4, 1, 1}}) {
        auto ctx = make_field(q, m);
        auto p = make_params(n, ell, static_cast<int>(m));
        Rng rng(100 + q * 10 + m);
        LinearCode c = random_code(k, p, ctx, rng);
        const int d = min_distance_bruteforce(c);
        CAPTURE(d);
        int tested = 0;
        for (int trial = 0; trial < 200; ++trial) {
            const int t = static_cast<int>(rng.below(static_cast<std::uint64_t>(d)));
            BlockVector e = sample_uniform_error(t, p, ctx, rng);
            BlockVector r = random_codeword(c, rng);
            for (int i = 0; i < n; ++i)
                r.entries[static_cast<std::size_t>(i)] = ctx.ext().add(r.entries[static_cast<std::size_t>(i)], e.entries[static_cast<std::size_t>(i)]);
            for (SupportKind kind : {SupportKind::Row, SupportKind::Column}) {
                const int cap = std::min(d - 1, ell * p.zeta(kind));
                const int s = t + static_cast<int>(rng.below(static_cast<std::uint64_t>(cap - t + 1)));
                SumRankSupport f = enlarge(ctx, support_of(ctx, e, kind), s, rng);
                ErasureResult res = erasure_decode(ctx, p, c.H, r, f);
                CHECK(res.ok());
                CHECK(res.e == e);
                ++tested;
            }
        }
        CHECK(tested == 400);
    }
}

TEST_CASE("erasure decoding is sound on arbitrary supports")
{
    auto ctx = make_field(2, 3);
    auto p = make_params(6, 2, 3);
    Rng rng(5);
    LinearCode c = random_code(2, p, ctx, rng);
    for (int trial = 0; trial < 200; ++trial) {
        BlockVector r(p);
        for (auto& x : r.entries) x = uniform_element(ctx.ext(), rng);
        for (SupportKind kind : {SupportKind::Row, SupportKind::Column}) {
            SumRankSupport empty;
            empty.kind = kind;
            empty.zeta = p.zeta(kind);
            empty.bases.assign(2, FqMatrix(0, static_cast<std::size_t>(empty.zeta)));
            SumRankSupport f = enlarge(ctx, empty, 1 + static_cast<int>(rng.below(4)), rng);
            ErasureResult res = erasure_decode(ctx, p, c.H, r, f);
            if (!res.ok()) continue;
            ElemVector diff(r.entries.size());
            for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = ctx.ext().sub(r.entries[i], res.e.entries[i]);
            CHECK(is_zero(syndrome(ctx, c.H, diff)));
            CHECK(support_contains(ctx, f, support_of(ctx, res.e, kind)));
        }
    }
}

TEST_CASE("code files round-trip")
{
    auto ctx = make_field(3, 2);
    auto p = make_params(4, 2, 2);
    Rng rng(8);
    LinearCode c = random_code(2, p, ctx, rng);
    std::stringstream ss;
    write_code(ss, c);
    LinearCode back = read_code(ss);
    CHECK(back.H == c.H);
    CHECK(back.k == 2);
    CHECK(back.params == p);
    std::stringstream bad("2 3 4");
    CHECK_THROWS_AS(read_code(bad), Error);
    std::stringstream junk("2 3 4 x 2");
    CHECK_THROWS_AS(read_code(junk), Error);
    std::stringstream vec;
    ElemVector v{1, 2, 3};
    write_vector(vec, v);
    CHECK(read_vector(vec, 3) == v);
}
