#include "sumrank/distribution.hpp"

#include <algorithm>
#include <map>

#include "sumrank/counting.hpp"
#include "sumrank/sampling.hpp"

namespace sumrank {

namespace {

void check_scomp_input(const IntVector& t, int s, int zeta)
{
    long sum = 0;
    for (int v : t) {
        if (v < 0 || v > zeta) throw Error(ErrorCode::InfeasibleTarget, "entry exceeds zeta");
        sum += v;
    }
    if (s < sum || static_cast<long>(s) > static_cast<long>(zeta) * static_cast<long>(t.size()))
        throw Error(ErrorCode::InfeasibleTarget, "s must satisfy sum(t) <= s <= ell * zeta");
}

template <class Pick>
IntVector scomp_impl(const IntVector& t, int s, int zeta, Pick pick)
{
    check_scomp_input(t, s, zeta);
    IntVector out = t;
    int delta = s;
    for (int v : t) delta -= v;
    std::vector<std::size_t> j3;
    while (delta > 0) {
        int best_t = -1, best_s = 0;
        j3.clear();
        for (std::size_t i = 0; i < out.size(); ++i) {
            if (out[i] == zeta) continue;
            if (t[i] > best_t || (t[i] == best_t && out[i] < best_s)) {
                best_t = t[i];
                best_s = out[i];
                j3.assign(1, i);
            } else if (t[i] == best_t && out[i] == best_s) {
                j3.push_back(i);
            }
        }
        ++out[j3[pick(j3.size())]];
        --delta;
    }
    return out;
}

} // namespace

IntVector scomp(const IntVector& t, int s, int zeta, Rng& rng)
{
    return scomp_impl(t, s, zeta, [&](std::size_t n) { return static_cast<std::size_t>(rng.below(n)); });
}

IntVector scomp_first(const IntVector& t, int s, int zeta)
{
    return scomp_impl(t, s, zeta, [](std::size_t) { return std::size_t{0}; });
}

BigRational rho(const IntVector& s, const IntVector& t, std::uint64_t q, int zeta)
{
    if (s.size() != t.size()) throw Error(ErrorCode::DimensionMismatch, "vectors differ in length");
    BigInt num = 1, den = 1;
    for (std::size_t i = 0; i < s.size(); ++i) {
        num *= gaussian_binomial(s[i], t[i], q);
        den *= gaussian_binomial(zeta, t[i], q);
    }
    BigRational r(num, den);
    r.canonicalize();
    return r;
}

BigRational rho_s(const IntVector& t, int s, std::uint64_t q, int zeta)
{
    return rho(scomp_first(t, s, zeta), t, q, zeta);
}

MTable::MTable(std::uint64_t q, int zeta, int t, int ell, int mu, int s)
    : q_(q), zeta_(zeta), t_(t), ell_(ell), mu_(mu), s_(s)
{
    if (ell < 1 || zeta < 1 || mu < 0 || mu > zeta || t < 0 || t > s || s > ell * zeta || t > ell * mu)
        throw Error(ErrorCode::InfeasibleParams, "need t <= s <= ell*zeta, t <= ell*mu and mu <= zeta");
    const std::size_t z = static_cast<std::size_t>(zeta) + 1;
    gauss_.resize(z * z);
    for (int a = 0; a <= zeta; ++a)
        for (int b = 0; b <= zeta; ++b) gauss_[a * z + b] = gaussian_binomial(a, b, q);
    const std::size_t n = static_cast<std::size_t>(t + 1) * (ell + 1) * (mu + 2) * (s + 1);
    values_.resize(n);
    known_.assign(n, 0);
}

const BigInt& MTable::gauss(int a, int b) const
{
    if (a < 0 || b < 0 || a > zeta_ || b > zeta_) throw Error(ErrorCode::IndexOutOfRange, "gauss index");
    return gauss_[static_cast<std::size_t>(a) * (zeta_ + 1) + b];
}

std::size_t MTable::index(int tp, int lp, int mup, int sp) const
{
    return ((static_cast<std::size_t>(tp) * (ell_ + 1) + lp) * (mu_ + 2) + (mup + 1)) * (s_ + 1) + sp;
}

BigRational MTable::block_factor(int t1, int delta, int budget) const
{
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    auto key = std::make_tuple(t1, delta, budget);
    auto it = factors_.find(key);
    if (it != factors_.end()) return it->second;
    const int base = budget / delta, extra = budget % delta;
    BigInt num = 1, den = factorial(static_cast<std::uint64_t>(delta));
    for (int i = 0; i < delta; ++i) {
        num *= gauss(zeta_, t1);
        den *= gauss(i < extra ? base + 1 : base, t1);
    }
    BigRational f(num, den);
    f.canonicalize();
    factors_.emplace(key, f);
    return f;
}

BigRational MTable::get(int tp, int lp, int mup, int sp) const
{
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    return get_locked(tp, lp, mup, sp);
}

const BigRational& MTable::get_locked(int tp, int lp, int mup, int sp) const
{
    static const BigRational zero(0), one(1);
    if (tp < 0 || lp < 0 || sp < 0 || mup < -1) return zero;
    if (lp == 0) return (tp == 0 && sp == 0) ? one : zero;
    if (tp > t_ || lp > ell_ || sp > s_ || mup > mu_)
        throw Error(ErrorCode::IndexOutOfRange, "M-table index outside the table");
    if (!(tp <= std::min(sp, lp * mup) && sp <= lp * zeta_)) return zero;
    const std::size_t idx = index(tp, lp, mup, sp);
    if (known_[idx]) return values_[idx];

    BigRational res = 0;
    for (int t1 = (tp + lp - 1) / lp; t1 <= std::min(mup, tp); ++t1) {
        const int dlo = std::max(tp - lp * (t1 - 1), 1);
        const int dhi = t1 > 0 ? std::min(lp, tp / t1) : lp;
        for (int d = dlo; d <= dhi; ++d) {
            const int budget = std::min(sp - (tp - d * t1), d * zeta_);
            const BigRational& rest = get_locked(tp - d * t1, lp - d, t1 - 1, sp - budget);
            if (rest == 0) continue;
            res += block_factor(t1, d, budget) * rest;
        }
    }
    values_[idx] = res;
    known_[idx] = 1;
    return values_[idx];
}

BigRational MTable::q_value() const
{
    return BigRational(factorial(static_cast<std::uint64_t>(ell_))) * get(t_, ell_, mu_, s_);
}

SupportDistribution::SupportDistribution(std::uint64_t q, int zeta, int t, int ell, int mu, int s)
    : table_(std::make_shared<MTable>(q, zeta, t, ell, mu, s))
{
    q_ = table_->q_value();
    BigInt inner = 1;
    for (int a = 0; a <= mu; ++a)
        for (int b = a; b <= zeta; ++b) inner *= table_->gauss(b, a);
    BigInt p;
    mpz_pow_ui(p.get_mpz_t(), inner.get_mpz_t(), static_cast<unsigned long>(ell));
    iota_ = factorial(static_cast<std::uint64_t>(ell)) * p;
}

BigRational SupportDistribution::prefix_weight(const IntVector& prefix) const
{
    const MTable& m = *table_;
    const int ell = m.ell(), t = m.t(), s = m.s(), zeta = m.zeta(), mu = m.mu();
    if (prefix.empty()) return q_;
    const int lp = static_cast<int>(prefix.size());
    if (lp > ell) return 0;
    for (int i = 0; i < lp; ++i) {
        if (prefix[i] < 0 || prefix[i] > mu) return 0;
        if (i > 0 && prefix[i] > prefix[i - 1]) return 0;
    }
    const int tl = prefix.back();
    int delta = 0;
    while (delta < lp && prefix[lp - 1 - delta] == tl) ++delta;
    const IntVector head(prefix.begin(), prefix.end() - delta);
    int t1sum = 0;
    for (int v : head) t1sum += v;
    if (t1sum + delta * tl > t) return 0;

    const int s1 = std::min(s - t + t1sum, (lp - delta) * zeta);
    BigRational pre(factorial(static_cast<std::uint64_t>(ell)));
    if (!head.empty()) {
        const IntVector sh = scomp_first(head, s1, zeta);
        std::map<int, int> counts;
        BigInt num = 1, den = 1;
        for (std::size_t j = 0; j < head.size(); ++j) {
            ++counts[head[j]];
            num *= m.gauss(zeta, head[j]);
            den *= m.gauss(sh[j], head[j]);
        }
        for (auto [_, c] : counts) den *= factorial(static_cast<std::uint64_t>(c));
        BigRational f(num, den);
        f.canonicalize();
        pre *= f;
    }

    const int room = ell - lp + delta;
    const int rest_t = t - t1sum;
    const int dlo = std::max(rest_t - (tl - 1) * room, delta);
    const int dhi = tl > 0 ? std::min(room, rest_t / tl) : room;
    BigRational sum = 0;
    for (int d = dlo; d <= dhi; ++d) {
        const int s2 = std::min(s - s1 - (rest_t - d * tl), d * zeta);
        BigRational rest = m.get(rest_t - d * tl, ell - (lp - delta + d), tl - 1, s - s1 - s2);
        if (rest == 0) continue;
        sum += m.block_factor(tl, d, s2) * rest;
    }
    return pre * sum;
}

BigRational SupportDistribution::prefix_sum(const IntVector& prefix) const
{
    BigRational w = prefix_weight(prefix);
    if (w == 0) throw Error(ErrorCode::InvalidPrefix, "prefix is unsorted, out of range or cannot be completed");
    return w;
}

BigRational SupportDistribution::probability(const IntVector& t) const
{
    if (static_cast<int>(t.size()) != ell()) throw Error(ErrorCode::DimensionMismatch, "length must equal ell");
    int sum = 0;
    for (int v : t) {
        if (v < 0 || v > mu()) return 0;
        sum += v;
    }
    if (sum != this->t()) return 0;
    BigRational r = rho_s(t, s(), q(), zeta());
    return 1 / (r * q_);
}

WeightDecomposition draw_decomposition(const SupportDistribution& dist, Rng& rng)
{
    const BigInt& iota = dist.iota();
    BigRational scaled = dist.q_value() * BigRational(iota);
    scaled.canonicalize();
    if (scaled.get_den() != 1) throw Error(ErrorCode::InvalidParams, "iota * Q is not an integer");
    BigRational x(rng.below(BigInt(scaled.get_num())), iota);
    x.canonicalize();

    IntVector prefix;
    for (int i = 0; i < dist.ell(); ++i) {
        const int hi = prefix.empty() ? std::min(dist.mu(), dist.t()) : prefix.back();
        BigRational cum = 0;
        int chosen = -1;
        for (int v = 0; v <= hi; ++v) {
            prefix.push_back(v);
            BigRational w = dist.prefix_weight(prefix);
            prefix.pop_back();
            if (cum + w > x) {
                chosen = v;
                break;
            }
            cum += w;
        }
        if (chosen < 0) throw Error(ErrorCode::InvalidParams, "enumerative descent found no interval");
        x -= cum;
        prefix.push_back(chosen);
    }
    rng.shuffle(prefix);
    return WeightDecomposition{prefix};
}

SumRankSupport draw_random_support(const SupportDistribution& dist, SupportKind kind, const FiniteField& base,
                                   Rng& rng)
{
    WeightDecomposition td = draw_decomposition(dist, rng);
    IntVector sv = scomp(td.t, dist.s(), dist.zeta(), rng);
    SumRankSupport f;
    f.kind = kind;
    f.zeta = dist.zeta();
    for (int si : sv) f.bases.push_back(sample_uniform_subspace(si, dist.zeta(), base, rng));
    return f;
}

SumRankSupport draw_random_support(int s, int t, int zeta, int ell, const FiniteField& base, SupportKind kind,
                                   Rng& rng, int mu)
{
    if (mu < 0) mu = zeta;
    if (t < 0 || t > s || s > ell * mu) throw Error(ErrorCode::InfeasibleParams, "need t <= s <= ell * mu");
    SupportDistribution dist(base.order(), zeta, t, ell, mu, s);
    return draw_random_support(dist, kind, base, rng);
}

} // namespace sumrank
