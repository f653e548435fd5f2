#include "sumrank/workfactor.hpp"

#include <cmath>
#include <iomanip>
#include <map>
#include <ostream>

#include "sumrank/counting.hpp"
#include "sumrank/distribution.hpp"

namespace sumrank {

WIterModel parse_w_iter_model(const std::string& name)
{
    if (name == "unit") return WIterModel::Unit;
    if (name == "cubic") return WIterModel::Cubic;
    throw Error(ErrorCode::UnknownModel, "unknown W_iter model '" + name + "'");
}

const char* to_string(WIterModel model) noexcept
{
    return model == WIterModel::Unit ? "unit" : "cubic";
}

double w_iter_log2(const WorkFactorParams& p, WIterModel model)
{
    if (model == WIterModel::Unit) return 0;
    const double lq = std::log2(static_cast<double>(p.q));
    return 3 * std::log2(static_cast<double>(p.n)) + 3 * std::log2(static_cast<double>(p.m)) + std::log2(lq);
}

bool feasible(const WorkFactorParams& p)
{
    if (p.n <= 0 || p.ell <= 0 || p.m <= 0 || p.n % p.ell != 0) return false;
    return p.t >= 0 && p.t <= p.s && p.s <= p.ell * p.mu();
}

BigRational q_value_for(const WorkFactorParams& p)
{
    if (!feasible(p)) throw Error(ErrorCode::InfeasibleParams, "need ell | n and t <= s <= ell * mu");
    return MTable(p.q, p.mu(), p.t, p.ell, p.mu(), p.s).q_value();
}

WNewBounds w_new_bounds(const WorkFactorParams& p, WIterModel model)
{
    const BigRational q = q_value_for(p);
    const double lq = std::log2(static_cast<double>(p.q));
    const double wi = w_iter_log2(p, model);
    WNewBounds b;
    b.lb = log2_big(q) - log2_big(num_decompositions(p.t, p.ell, p.mu()));
    b.ub = wi + log2_big(q);
    b.ub_simple = wi + log2_big(binomial(p.ell + p.t - 1, p.ell - 1)) + p.ell * log2_gamma_upper(p.q) +
                  p.t * (p.mu() - static_cast<double>(p.s) / p.ell) * lq;
    return b;
}

WNaive w_naive(const WorkFactorParams& p)
{
    const double lq = std::log2(static_cast<double>(p.q));
    WNaive w;
    w.w_code = static_cast<double>(p.m) * p.k * lq +
               std::log2(static_cast<double>(p.m) * p.m * static_cast<double>(p.k) * p.n);
    const double prefix = std::log2(static_cast<double>(p.n) * (p.n - p.k) * static_cast<double>(p.m) * p.m);
    const int eta = p.eta();
    w.w_errors = prefix + log2_big(binomial(p.ell + p.t - 1, p.ell - 1)) + p.ell * log2_gamma_upper(p.q) +
                 p.t * (p.m + eta - static_cast<double>(p.t) / p.ell) * lq;
    w.w_errors_exact = prefix + log2_big(sphere_size(p.t, p.ell, p.q, eta, p.m));
    return w;
}

double w_prange(const WorkFactorParams& p, WIterModel model)
{
    if (p.ell != p.n) throw Error(ErrorCode::WrongRegime, "Prange specialization needs ell = n");
    return w_iter_log2(p, model) + log2_big(binomial(p.n, p.t)) - log2_big(binomial(p.s, p.t));
}

double w_grs(const WorkFactorParams& p, WIterModel model)
{
    if (p.ell != 1) throw Error(ErrorCode::WrongRegime, "rank specialization needs ell = 1");
    return w_iter_log2(p, model) + p.t * (std::min(p.n, p.m) - p.s) * std::log2(static_cast<double>(p.q));
}

BigRational rho_orbit_sum(const IntVector& s, const IntVector& t, std::uint64_t q, int zeta)
{
    if (s.size() != t.size()) throw Error(ErrorCode::DimensionMismatch, "vectors differ in length");
    std::vector<int> values;
    std::vector<int> counts;
    for (int v : s) {
        auto it = std::find(values.begin(), values.end(), v);
        if (it == values.end()) {
            values.push_back(v);
            counts.push_back(1);
        } else {
            ++counts[static_cast<std::size_t>(it - values.begin())];
        }
    }
    std::map<std::pair<int, int>, BigRational> ratio;
    auto r = [&](int sv, int tv) -> const BigRational& {
        auto key = std::make_pair(sv, tv);
        auto it = ratio.find(key);
        if (it != ratio.end()) return it->second;
        BigRational v(gaussian_binomial(sv, tv, q), gaussian_binomial(zeta, tv, q));
        v.canonicalize();
        return ratio.emplace(key, v).first->second;
    };
    // Memoized over (position, remaining counts).
    std::map<std::pair<std::size_t, std::vector<int>>, BigRational> memo;
    std::function<BigRational(std::size_t)> rec = [&](std::size_t pos) -> BigRational {
        if (pos == t.size()) return 1;
        auto key = std::make_pair(pos, counts);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        BigRational acc = 0;
        for (std::size_t v = 0; v < values.size(); ++v) {
            if (counts[v] == 0) continue;
            const BigRational& f = r(values[v], t[pos]);
            if (f == 0) continue;
            --counts[v];
            acc += f * rec(pos + 1);
            ++counts[v];
        }
        memo.emplace(std::move(key), acc);
        return acc;
    };
    return rec(0);
}

LpInstance build_optimal_lp(std::uint64_t q, int zeta, int mu, int t, int ell, int s, std::size_t cap)
{
    if (ell < 1 || mu < 0 || mu > zeta || t < 0 || t > s || s > ell * mu)
        throw Error(ErrorCode::InfeasibleParams, "need t <= s <= ell * mu and mu <= zeta");
    LpInstance lp;
    lp.s_classes = ordered_decompositions(s, ell, zeta);
    if (lp.s_classes.size() > cap) throw Error(ErrorCode::TooLarge, "too many LP variables");
    lp.t_classes = ordered_decompositions(t, ell, mu);
    const std::size_t nv = lp.s_classes.size() + 1;
    for (const auto& sc : lp.s_classes) lp.multiplicity.push_back(multiset_permutations(sc));
    for (const auto& tc : lp.t_classes) {
        RationalVector row(nv);
        for (std::size_t j = 0; j < lp.s_classes.size(); ++j) row[j] = -rho_orbit_sum(lp.s_classes[j], tc, q, zeta);
        row[nv - 1] = 1;
        lp.a.push_back(std::move(row));
        lp.b.push_back(0);
    }
    RationalVector sum(nv), neg(nv);
    for (std::size_t j = 0; j + 1 < nv; ++j) {
        sum[j] = BigRational(lp.multiplicity[j]);
        neg[j] = -sum[j];
    }
    lp.a.push_back(sum);
    lp.b.push_back(1);
    lp.a.push_back(neg);
    lp.b.push_back(-1);
    lp.c.assign(nv, 0);
    lp.c[nv - 1] = 1;
    return lp;
}

OptimalDistribution optimal_distribution_lp(std::uint64_t q, int zeta, int mu, int t, int ell, int s, std::size_t cap)
{
    OptimalDistribution out;
    out.lp = build_optimal_lp(q, zeta, mu, t, ell, s, cap);
    out.result = simplex_maximize(out.lp.a, out.lp.b, out.lp.c);
    if (out.result.status != LpResult::Status::Optimal)
        throw Error(ErrorCode::InfeasibleParams, "linear program has no optimum");
    out.xi = out.result.value;
    out.per_class.assign(out.result.x.begin(), out.result.x.end() - 1);
    BigRational total = 0;
    for (std::size_t j = 0; j < out.per_class.size(); ++j) total += out.per_class[j] * BigRational(out.lp.multiplicity[j]);
    out.certified = total == 1 && verify_optimality(out.lp.a, out.lp.b, out.lp.c, out.result).valid;
    return out;
}

WorkFactorReport work_factor_report(const WorkFactorParams& p, WIterModel model, bool with_optimal, std::size_t lp_cap)
{
    WorkFactorReport r;
    r.params = p;
    r.model = model;
    r.naive = w_naive(p);
    r.feasible = feasible(p);
    if (!r.feasible) return r;
    r.bounds = w_new_bounds(p, model);
    if (p.ell == p.n) r.w_prange = w_prange(p, model);
    if (p.ell == 1) r.w_grs = w_grs(p, model);
    if (with_optimal) {
        try {
            OptimalDistribution od = optimal_distribution_lp(p.q, p.mu(), p.mu(), p.t, p.ell, p.s, lp_cap);
            r.w_optimal = w_iter_log2(p, model) - log2_big(od.xi);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::TooLarge) throw;
        }
    }
    return r;
}

void write_sweep_header(std::ostream& os)
{
    os << "q,m,n,k,ell,t,s,w_new_lb,w_new_ub,w_new_ub_simple,w_code,w_errors,w_prange,w_grs,w_optimal\n";
}

namespace {

void cell(std::ostream& os, std::optional<double> v)
{
    os << ',';
    if (v) os << std::fixed << std::setprecision(4) << *v;
}

} // namespace

void write_sweep_row(std::ostream& os, const WorkFactorReport& r)
{
    const auto& p = r.params;
    os << p.q << ',' << p.m << ',' << p.n << ',' << p.k << ',' << p.ell << ',' << p.t << ',' << p.s;
    auto f = [&](double v) { return r.feasible ? std::optional<double>(v) : std::nullopt; };
    cell(os, f(r.bounds.lb));
    cell(os, f(r.bounds.ub));
    cell(os, f(r.bounds.ub_simple));
    cell(os, r.naive.w_code);
    cell(os, r.naive.w_errors);
    cell(os, r.w_prange);
    cell(os, r.w_grs);
    cell(os, r.w_optimal);
    os << '\n';
}

} // namespace sumrank
