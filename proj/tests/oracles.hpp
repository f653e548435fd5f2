#pragma once

// Brute-force reference implementations used only by the tests. They avoid the
// library's elimination code: ranks come from counting spans, counts from
// enumeration.

#include <boost/math/distributions/chi_squared.hpp>

#include <cmath>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "sumrank/ffalg.hpp"
#include "sumrank/srspace.hpp"

namespace oracle {

using sumrank::Elem;
using sumrank::ElemVector;

inline std::uint64_t ipow(std::uint64_t b, unsigned e)
{
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

// Size of the GF(q)-span of the given GF(q^m) elements, by closure.
inline std::size_t span_size(const sumrank::FieldContext& ctx, const ElemVector& xs)
{
    std::set<Elem> span{0};
    const auto& f = ctx.ext();
    for (Elem x : xs) {
        std::set<Elem> next;
        for (Elem s : span)
            for (Elem c = 0; c < ctx.q(); ++c) next.insert(f.add(s, f.mul(c, x)));
        span = std::move(next);
    }
    return span.size();
}

inline int log_q(std::uint64_t q, std::size_t size)
{
    int r = 0;
    std::uint64_t v = 1;
    while (v < size) {
        v *= q;
        ++r;
    }
    return r;
}

inline int rank_weight(const sumrank::FieldContext& ctx, const ElemVector& xs)
{
    return log_q(ctx.q(), span_size(ctx, xs));
}

inline int sum_rank_weight(const sumrank::FieldContext& ctx, const ElemVector& x, int ell)
{
    const std::size_t eta = x.size() / static_cast<std::size_t>(ell);
    int w = 0;
    for (int i = 0; i < ell; ++i)
        w += rank_weight(ctx, ElemVector(x.begin() + static_cast<long>(i * eta),
                                         x.begin() + static_cast<long>((i + 1) * eta)));
    return w;
}

// Calls fn on every vector of length n with entries below base.
inline void for_each_vector(std::size_t n, std::uint64_t base, const std::function<void(const ElemVector&)>& fn)
{
    ElemVector v(n, 0);
    for (;;) {
        fn(v);
        std::size_t i = 0;
        while (i < n && ++v[i] == base) v[i++] = 0;
        if (i == n) return;
    }
}

// Rank of a matrix over GF(p), p prime, from the size of its row span.
inline int rank_by_span(const std::vector<ElemVector>& rows, std::uint64_t p)
{
    if (rows.empty()) return 0;
    const std::size_t c = rows[0].size();
    std::set<ElemVector> span{ElemVector(c, 0)};
    for (const auto& r : rows) {
        std::set<ElemVector> next;
        for (const auto& s : span)
            for (std::uint64_t a = 0; a < p; ++a) {
                ElemVector v(c);
                for (std::size_t j = 0; j < c; ++j) v[j] = (s[j] + a * r[j]) % p;
                next.insert(v);
            }
        span = std::move(next);
    }
    return log_q(p, span.size());
}

// Gaussian binomial from the q-Pascal rule.
inline double gauss(int a, int b, double q)
{
    if (b < 0 || b > a) return 0;
    if (b == 0 || b == a) return 1;
    return gauss(a - 1, b - 1, q) + std::pow(q, b) * gauss(a - 1, b, q);
}

// Pearson statistic and the 1 - alpha quantile of chi^2 with cells - 1 dof.
struct ChiSquare {
    double statistic = 0;
    double critical = 0;
    bool pass() const { return statistic <= critical; }
};

inline ChiSquare chi_square(const std::vector<double>& observed, const std::vector<double>& expected,
                            double alpha = 0.01)
{
    ChiSquare r;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        const double d = observed[i] - expected[i];
        r.statistic += d * d / expected[i];
    }
    boost::math::chi_squared dist(static_cast<double>(observed.size() - 1));
    r.critical = boost::math::quantile(boost::math::complement(dist, alpha));
    return r;
}

} // namespace oracle
