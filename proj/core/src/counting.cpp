#include "sumrank/counting.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <mutex>

namespace sumrank {

BigInt gaussian_binomial(int a, int b, std::uint64_t q)
{
    if (b < 0 || a < 0 || b > a) return 0;
    BigInt num = 1, den = 1;
    for (int i = 1; i <= b; ++i) {
        num *= ipow(q, static_cast<std::uint64_t>(a - b + i)) - 1;
        den *= ipow(q, static_cast<std::uint64_t>(i)) - 1;
    }
    return num / den;
}

BigInt num_matrices_of_rank(int a, int b, int i, std::uint64_t q)
{
    if (a < 0 || b < 0 || i < 0 || i > std::min(a, b))
        throw Error(ErrorCode::IndexOutOfRange, "rank exceeds min(a, b)");
    BigInt num = 1, den = 1;
    const BigInt qa = ipow(q, a), qb = ipow(q, b), qi = ipow(q, i);
    for (int j = 0; j < i; ++j) {
        const BigInt qj = ipow(q, j);
        num *= (qa - qj) * (qb - qj);
        den *= qi - qj;
    }
    return num / den;
}

BigInt num_decompositions(int t, int ell, int mu)
{
    if (t < 0 || ell < 0 || mu < 0) return 0;
    if (ell == 0) return t == 0 ? 1 : 0;
    if (t > static_cast<long>(mu) * ell) return 0;
    BigInt sum = 0;
    for (int j = 0; j <= ell; ++j) {
        const long rest = t - static_cast<long>(j) * (mu + 1);
        if (rest < 0) break;
        BigInt term = binomial(ell, j) * binomial(rest + ell - 1, ell - 1);
        if (j % 2) sum -= term;
        else sum += term;
    }
    return sum;
}

namespace {

void enumerate(int t, int ell, int lo, int hi, bool ordered, IntVector& cur, std::vector<IntVector>& out)
{
    const int pos = static_cast<int>(cur.size());
    if (pos == ell) {
        if (t == 0) out.push_back(cur);
        return;
    }
    const int remaining = ell - pos - 1;
    for (int v = lo; v <= std::min(hi, t); ++v) {
        const int next_hi = ordered ? v : hi;
        if (static_cast<long>(t - v) > static_cast<long>(remaining) * next_hi) continue;
        cur.push_back(v);
        enumerate(t - v, ell, lo, next_hi, ordered, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<IntVector> all_decompositions(int t, int ell, int mu)
{
    std::vector<IntVector> out;
    if (t < 0 || ell < 0 || mu < 0) return out;
    IntVector cur;
    enumerate(t, ell, 0, mu, false, cur, out);
    return out;
}

std::vector<IntVector> ordered_decompositions(int t, int ell, int mu)
{
    std::vector<IntVector> out;
    if (t < 0 || ell < 0 || mu < 0) return out;
    IntVector cur;
    enumerate(t, ell, 0, mu, true, cur, out);
    return out;
}

BigInt multiset_permutations(const IntVector& v)
{
    std::map<int, int> counts;
    for (int x : v) ++counts[x];
    BigInt r = factorial(v.size());
    for (auto [_, c] : counts) r /= factorial(static_cast<std::uint64_t>(c));
    return r;
}

SphereTable::SphereTable(std::uint64_t q, int eta, int m, int t_max, int ell_max)
    : q_(q), eta_(eta), m_(m), mu_(std::min(eta, m)), t_max_(t_max), ell_max_(ell_max)
{
    if (eta <= 0 || m <= 0 || t_max < 0 || ell_max < 0)
        throw Error(ErrorCode::InvalidParams, "invalid sphere table parameters");
    for (int i = 0; i <= mu_; ++i) nm_.push_back(num_matrices_of_rank(m, eta, i, q));
    const std::size_t w = static_cast<std::size_t>(ell_max_) + 1;
    table_.assign((static_cast<std::size_t>(t_max_) + 1) * w, 0);
    table_[0] = 1;
    for (int l = 1; l <= ell_max_; ++l)
        for (int t = 0; t <= t_max_; ++t) {
            BigInt acc = 0;
            for (int i = 0; i <= std::min(mu_, t); ++i) {
                const BigInt& prev = table_[static_cast<std::size_t>(t - i) * w + (l - 1)];
                if (prev != 0) acc += nm_[i] * prev;
            }
            table_[static_cast<std::size_t>(t) * w + l] = acc;
        }
}

const BigInt& SphereTable::at(int t, int ell) const
{
    if (t < 0 || ell < 0 || t > t_max_ || ell > ell_max_)
        throw Error(ErrorCode::IndexOutOfRange, "sphere table index out of range");
    return table_[static_cast<std::size_t>(t) * (ell_max_ + 1) + ell];
}

const BigInt& SphereTable::block_count(int i) const
{
    if (i < 0 || i > mu_) throw Error(ErrorCode::IndexOutOfRange, "block rank out of range");
    return nm_[i];
}

BigInt sphere_size(int t, int ell, std::uint64_t q, int eta, int m)
{
    if (t < 0) return 0;
    if (t > std::min(eta, m) * ell) return 0;
    return SphereTable(q, eta, m, t, ell).at(t, ell);
}

double log2_gamma_upper(std::uint64_t q)
{
    const double lq = std::log2(static_cast<double>(q));
    double s = 0;
    for (int i = 1; i <= 64; ++i) s -= std::log1p(-std::exp2(-lq * i)) / std::log(2.0);
    s += std::log1p(2.0 * std::exp2(-64.0 * lq)) / std::log(2.0);
    return s;
}

BigRational gamma_upper_rational(std::uint64_t q)
{
    static std::mutex mu;
    static std::map<std::uint64_t, BigRational> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it != cache.end()) return it->second;
    BigInt num = 1, den = 1;
    for (int i = 1; i <= 64; ++i) {
        const BigInt qi = ipow(q, i);
        num *= qi;
        den *= qi - 1;
    }
    const BigInt q64 = ipow(q, 64);
    BigRational g(num * (q64 + 2), den * q64);
    g.canonicalize();
    cache.emplace(q, g);
    return g;
}

double sphere_size_log2_upper_bound(int t, int ell, std::uint64_t q, int eta, int m)
{
    if (ell < 1) throw Error(ErrorCode::InvalidParams, "ell must be positive");
    if (t < 0 || t > std::min(eta, m) * ell) throw Error(ErrorCode::InvalidWeight, "t out of range");
    const double lq = std::log2(static_cast<double>(q));
    const double expo = t * (m + eta - static_cast<double>(t) / ell);
    return ell * log2_gamma_upper(q) + log2_big(binomial(ell + t - 1, ell - 1)) + expo * lq;
}

} // namespace sumrank
