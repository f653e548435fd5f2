#include <doctest.h>

#include <map>

#include "oracles.hpp"
#include "sumrank/counting.hpp"

using namespace sumrank;

TEST_CASE("Gaussian binomials follow the q-Pascal rule")
{
    CHECK(gaussian_binomial(4, 2, 2) == 35);
    CHECK(gaussian_binomial(3, 1, 3) == 13);
    CHECK(gaussian_binomial(5, 6, 2) == 0);
    CHECK(gaussian_binomial(5, -1, 2) == 0);
    for (std::uint64_t q : {2ull, 3ull, 4ull, 5ull})
        for (int a = 0; a <= 8; ++a)
            for (int b = 0; b <= a; ++b)
                CHECK(gaussian_binomial(a, b, q).get_d() == doctest::Approx(oracle::gauss(a, b, static_cast<double>(q))));
}

TEST_CASE("matrices of given rank match enumeration")
{
    for (auto [q, a, b] : {std::tuple{2ull, 2, 3}, {3, 2, 2}, {2, 3, 3}, {5, 1, 3}}) {
        std::map<int, long> hist;
        oracle::for_each_vector(static_cast<std::size_t>(a * b), q, [&](const ElemVector& v) {
            std::vector<ElemVector> rows(static_cast<std::size_t>(a));
            for (int r = 0; r < a; ++r) rows[static_cast<std::size_t>(r)].assign(v.begin() + r * b, v.begin() + (r + 1) * b);
            ++hist[oracle::rank_by_span(rows, q)];
        });
        for (int i = 0; i <= std::min(a, b); ++i) CHECK(num_matrices_of_rank(a, b, i, q) == hist[i]);
    }
    CHECK_THROWS_AS(num_matrices_of_rank(2, 2, 3, 2), Error);
    CHECK_THROWS_AS(num_matrices_of_rank(2, 2, -1, 2), Error);
}

TEST_CASE("decomposition enumerations")
{
    for (int t = 0; t <= 7; ++t)
        for (int ell = 1; ell <= 4; ++ell)
            for (int mu = 0; mu <= 3; ++mu) {
                long brute = 0;
                oracle::for_each_vector(static_cast<std::size_t>(ell), static_cast<std::uint64_t>(mu + 1),
                                        [&](const ElemVector& v) {
                                            long s = 0;
                                            for (auto x : v) s += static_cast<long>(x);
                                            brute += s == t;
                                        });
                CHECK(num_decompositions(t, ell, mu) == brute);
                auto all = all_decompositions(t, ell, mu);
                CHECK(static_cast<long>(all.size()) == brute);
                CHECK(std::is_sorted(all.begin(), all.end()));
                BigInt total = 0;
                auto ord = ordered_decompositions(t, ell, mu);
                CHECK(std::is_sorted(ord.begin(), ord.end()));
                for (const auto& o : ord) {
                    CHECK(std::is_sorted(o.rbegin(), o.rend()));
                    total += multiset_permutations(o);
                }
                CHECK(total == brute);
            }
    CHECK(multiset_permutations({2, 1, 1, 0}) == 12);
}

TEST_CASE("sphere sizes match brute force and partition the space")
{
    for (auto [q, m, n, ell] : {std::tuple{2u, 2u, 4, 2}, {2, 2, 4, 1}, {2, 2, 4, 4}, {3, 2, 2, 1}, {2, 3, 4, 2},
                                {2, 1, 6, 3}, {4, 1, 4, 2}, {2, 4, 2, 1}}) {
        CAPTURE(q);
        CAPTURE(m);
        CAPTURE(n);
        CAPTURE(ell);
        auto ctx = make_field(q, m);
        std::map<int, long> hist;
        oracle::for_each_vector(static_cast<std::size_t>(n), ctx.ext().order(),
                                [&](const ElemVector& v) { ++hist[oracle::sum_rank_weight(ctx, v, ell)]; });
        const int eta = n / ell;
        BigInt total = 0;
        for (int t = 0; t <= n; ++t) {
            BigInt nt = sphere_size(t, ell, q, eta, static_cast<int>(m));
            CHECK(nt == hist[t]);
            total += nt;
        }
        CHECK(total == BigInt(ipow(ctx.ext().order(), static_cast<std::uint64_t>(n))));
    }
    CHECK(sphere_size(2, 2, 2, 2, 2) == 93);
    CHECK(sphere_size(0, 3, 2, 2, 2) == 1);
}

TEST_CASE("sphere table agrees with direct computation")
{
    SphereTable table(2, 3, 4, 9, 3);
    for (int t = 0; t <= 9; ++t)
        for (int ell = 1; ell <= 3; ++ell) CHECK(table.at(t, ell) == sphere_size(t, ell, 2, 3, 4));
    CHECK(table.at(0, 0) == 1);
    CHECK(table.at(1, 0) == 0);
    for (int i = 0; i <= 3; ++i) CHECK(table.block_count(i) == num_matrices_of_rank(4, 3, i, 2));
}

TEST_CASE("gamma_q bound")
{
    // prod (1 - 2^-i)^-1 = 3.4627466194550636...
    CHECK(std::exp2(log2_gamma_upper(2)) == doctest::Approx(3.4627466194550636).epsilon(1e-12));
    CHECK(gamma_upper_rational(2) >= BigRational("34627466194550636/10000000000000000"));
    for (std::uint64_t q : {2ull, 3ull, 4ull, 7ull, 16ull}) {
        // Truncated products with 200 factors bound gamma from below.
        double lower = 1;
        for (int i = 1; i <= 200; ++i) lower /= 1 - std::pow(static_cast<double>(q), -i);
        CHECK(std::exp2(log2_gamma_upper(q)) >= lower * (1 - 1e-14));
        CHECK(gamma_upper_rational(q).get_d() == doctest::Approx(std::exp2(log2_gamma_upper(q))));
    }
}

TEST_CASE("sphere bound dominates the exact count")
{
    for (std::uint64_t q : {2ull, 3ull})
        for (int m = 1; m <= 5; ++m)
            for (int eta = 1; eta <= 4; ++eta)
                for (int ell = 1; ell <= 4; ++ell)
                    for (int t = 0; t <= std::min(eta, m) * ell; ++t) {
                        const BigInt n = sphere_size(t, ell, q, eta, m);
                        CHECK(sphere_size_log2_upper_bound(t, ell, q, eta, m) >= log2_big(n) - 1e-9);
                    }
    CHECK_THROWS_AS(sphere_size_log2_upper_bound(1, 0, 2, 2, 2), Error);
    CHECK_THROWS_AS(sphere_size_log2_upper_bound(9, 2, 2, 2, 2), Error);
}

TEST_CASE("big-number helpers")
{
    CHECK(binomial(60, 9) == BigInt("14783142660"));
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(factorial(20) == BigInt("2432902008176640000"));
    CHECK(ipow(3, 40) == BigInt("12157665459056928801"));
    CHECK(log2_big(ipow(2, 3000)) == doctest::Approx(3000));
    CHECK(log2_big(BigInt(BigInt(3) * ipow(2, 2000))) == doctest::Approx(2000 + std::log2(3.0)));
    CHECK(log2_big(BigRational(1, 8)) == doctest::Approx(-3));
    CHECK(to_decimal(BigInt(93)) == "93");
}
