#include <doctest.h>

#include <map>

#include "oracles.hpp"
#include "sumrank/counting.hpp"
#include "sumrank/distribution.hpp"

using namespace sumrank;

namespace {

BigRational rho_direct(const IntVector& s, const IntVector& t, std::uint64_t q, int zeta)
{
    BigRational r = 1;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (t[i] > s[i]) return 0;
        r *= BigRational(BigInt(oracle::gauss(s[i], t[i], static_cast<double>(q))),
                         BigInt(oracle::gauss(zeta, t[i], static_cast<double>(q))));
    }
    r.canonicalize();
    return r;
}

BigRational best_rho(const IntVector& t, int s, std::uint64_t q, int zeta)
{
    BigRational best = 0;
    for (const auto& sv : all_decompositions(s, static_cast<int>(t.size()), zeta)) {
        BigRational r = rho_direct(sv, t, q, zeta);
        if (r > best) best = r;
    }
    return best;
}

} // namespace

TEST_CASE("rho matches the direct product")
{
    CHECK(rho({2, 1}, {1, 1}, 2, 2) == BigRational(3, 3) * BigRational(1, 3));
    CHECK(rho({1}, {2}, 2, 3) == 0);
    for (const auto& s : all_decompositions(4, 2, 3))
        for (const auto& t : all_decompositions(2, 2, 2)) CHECK(rho(s, t, 3, 3) == rho_direct(s, t, 3, 3));
}

TEST_CASE("scomp is feasible and maximises rho")
{
    Rng rng(3);
    for (std::uint64_t q : {2ull, 3ull})
        for (int ell = 1; ell <= 3; ++ell)
            for (int zeta = 1; zeta <= 3; ++zeta)
                for (int t = 0; t <= ell * zeta; ++t)
                    for (const auto& tv : all_decompositions(t, ell, zeta))
                        for (int s = t; s <= ell * zeta; ++s) {
                            IntVector sv = scomp(tv, s, zeta, rng);
                            int sum = 0;
                            for (std::size_t i = 0; i < sv.size(); ++i) {
                                CHECK(sv[i] >= tv[i]);
                                CHECK(sv[i] <= zeta);
                                sum += sv[i];
                            }
                            CHECK(sum == s);
                            const BigRational best = best_rho(tv, s, q, zeta);
                            CHECK(rho(sv, tv, q, zeta) == best);
                            CHECK(rho(scomp_first(tv, s, zeta), tv, q, zeta) == best);
                            CHECK(rho_s(tv, s, q, zeta) == best);
                        }
    CHECK_THROWS_AS(scomp({2, 1}, 2, 3, rng), Error);
    CHECK_THROWS_AS(scomp({2, 1}, 7, 3, rng), Error);
}

TEST_CASE("scomp ties are broken uniformly")
{
    Rng rng(5);
    std::map<IntVector, double> counts;
    for (int i = 0; i < 6000; ++i) counts[scomp({1, 1, 1}, 4, 3, rng)] += 1;
    REQUIRE(counts.size() == 3);
    std::vector<double> obs, exp;
    for (auto& [k, v] : counts) {
        obs.push_back(v);
        exp.push_back(2000);
    }
    CHECK(oracle::chi_square(obs, exp).pass());
}

TEST_CASE("Q equals the direct sum of inverse rho")
{
    for (std::uint64_t q : {2ull, 3ull})
        for (int ell = 1; ell <= 3; ++ell)
            for (int zeta = 1; zeta <= 3; ++zeta)
                for (int mu = 1; mu <= zeta; ++mu)
                    for (int t = 0; t <= ell * mu; ++t)
                        for (int s = t; s <= ell * mu; ++s) {
                            BigRational direct = 0;
                            for (const auto& tv : all_decompositions(t, ell, mu)) direct += 1 / rho_s(tv, s, q, zeta);
                            MTable table(q, zeta, t, ell, mu, s);
                            CHECK(table.q_value() == direct);
                        }
    CHECK_THROWS_AS(MTable(2, 2, 3, 1, 2, 3), Error);
    CHECK_THROWS_AS(MTable(2, 2, 2, 2, 2, 1), Error);
    CHECK_THROWS_AS(MTable(2, 2, 1, 2, 3, 1), Error);
}

TEST_CASE("support distribution probabilities and prefix sums")
{
    SupportDistribution d(2, 3, 4, 3, 2, 5);
    BigRational total = 0;
    for (const auto& t : all_decompositions(4, 3, 2)) {
        BigRational p = d.probability(t);
        CHECK(p > 0);
        CHECK(p == 1 / (rho_s(t, 5, 2, 3) * d.q_value()));
        total += p;
    }
    CHECK(total == 1);
    CHECK(d.prefix_sum({}) == d.q_value());
    BigRational iq = d.q_value() * BigRational(d.iota());
    iq.canonicalize();
    CHECK(iq.get_den() == 1);

    // Prefix sums split over the next entry.
    for (const IntVector& prefix : {IntVector{}, IntVector{2}, IntVector{2, 1}}) {
        BigRational children = 0;
        for (int v = 0; v <= 2; ++v) {
            IntVector next = prefix;
            next.push_back(v);
            children += d.prefix_weight(next);
        }
        CHECK(children == d.prefix_sum(prefix));
    }
    // A complete vector carries ell!/prod(delta!) copies.
    CHECK(d.prefix_sum({2, 1, 1}) == BigRational(3) / rho_s({2, 1, 1}, 5, 2, 3));
    CHECK(d.prefix_weight({1, 2}) == 0);
    CHECK_THROWS_AS(d.prefix_sum({1, 2}), Error);
    CHECK_THROWS_AS(d.prefix_sum({0, 0}), Error);
    CHECK(d.prefix_weight({0, 0}) == 0);
}

TEST_CASE("draw_decomposition follows p_t")
{
    SupportDistribution d(2, 2, 3, 3, 2, 4);
    Rng rng(31);
    std::map<IntVector, double> counts;
    const int draws = 40000;
    for (int i = 0; i < draws; ++i) counts[draw_decomposition(d, rng).t] += 1;
    std::vector<double> obs, exp;
    for (const auto& t : all_decompositions(3, 3, 2)) {
        obs.push_back(counts[t]);
        exp.push_back(draws * d.probability(t).get_d());
    }
    CHECK(oracle::chi_square(obs, exp).pass());
}

TEST_CASE("random supports have dimension s")
{
    auto ctx = make_field(2, 1);
    Rng rng(37);
    for (SupportKind kind : {SupportKind::Row, SupportKind::Column})
        for (int i = 0; i < 50; ++i) {
            SumRankSupport f = draw_random_support(5, 3, 3, 2, ctx.base(), kind, rng);
            CHECK(f.kind == kind);
            CHECK(f.zeta == 3);
            CHECK(f.weight() == 5);
            for (const auto& b : f.bases) {
                CHECK(b.cols() == 3);
                CHECK(rank(ctx.base(), b) == b.rows());
            }
        }
    CHECK_THROWS_AS(draw_random_support(2, 3, 3, 2, ctx.base(), SupportKind::Row, rng), Error);
}
