#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sumrank/bigint.hpp"
#include "sumrank/simplex.hpp"
#include "sumrank/srspace.hpp"

namespace sumrank {

struct WorkFactorParams {
    std::uint64_t q = 2;
    int m = 1, n = 1, k = 0, ell = 1, t = 0, s = 0;

    int eta() const noexcept { return n / ell; }
    int mu() const noexcept { return eta() < m ? eta() : m; }
};

enum class WIterModel { Unit, Cubic };
WIterModel parse_w_iter_model(const std::string& name); // throws UnknownModel
const char* to_string(WIterModel model) noexcept;

// unit: 0; cubic: log2(n^3 m^3 log2 q).
double w_iter_log2(const WorkFactorParams& p, WIterModel model);

// Requires ell | n and t <= s <= ell * mu.
bool feasible(const WorkFactorParams& p);

// Q for zeta = mu = min(eta, m).
BigRational q_value_for(const WorkFactorParams& p);

struct WNewBounds {
    double lb = 0;        // log2(Q / |T|)
    double ub = 0;        // log2(W_iter Q)
    double ub_simple = 0; // log2(W_iter C(ell+t-1, ell-1) gamma^ell q^{t(zeta - s/ell)})
};
// Throws InfeasibleParams.
WNewBounds w_new_bounds(const WorkFactorParams& p, WIterModel model = WIterModel::Unit);

struct WNaive {
    double w_code = 0;
    double w_errors = 0;       // closed-form sphere bound
    double w_errors_exact = 0; // same cost with the exact sphere size
};
WNaive w_naive(const WorkFactorParams& p);

// log2(W_iter C(n,t)/C(s,t)); throws WrongRegime unless ell = n.
double w_prange(const WorkFactorParams& p, WIterModel model = WIterModel::Unit);
// log2(W_iter) + t(min(n,m) - s) log2 q; throws WrongRegime unless ell = 1.
double w_grs(const WorkFactorParams& p, WIterModel model = WIterModel::Unit);

struct LpInstance {
    std::vector<IntVector> s_classes; // non-increasing s-vectors, entries <= zeta
    std::vector<IntVector> t_classes; // non-increasing t-vectors, entries <= mu
    std::vector<BigInt> multiplicity; // permutations per s-class
    RationalMatrix a;
    RationalVector b;
    RationalVector c;
};

// Sum of rho(sigma, t) over the distinct permutations sigma of s.
BigRational rho_orbit_sum(const IntVector& s, const IntVector& t, std::uint64_t q, int zeta);

// Throws TooLarge when the number of s-classes exceeds cap.
LpInstance build_optimal_lp(std::uint64_t q, int zeta, int mu, int t, int ell, int s, std::size_t cap = 2000);

struct OptimalDistribution {
    LpInstance lp;
    LpResult result;
    BigRational xi;           // best worst-case success probability
    RationalVector per_class; // probability of each member of each s-class
    bool certified = false;
};
OptimalDistribution optimal_distribution_lp(std::uint64_t q, int zeta, int mu, int t, int ell, int s,
                                            std::size_t cap = 2000);

struct WorkFactorReport {
    WorkFactorParams params;
    WIterModel model = WIterModel::Unit;
    bool feasible = false;
    WNewBounds bounds;
    WNaive naive;
    std::optional<double> w_prange;
    std::optional<double> w_grs;
    std::optional<double> w_optimal;
};

WorkFactorReport work_factor_report(const WorkFactorParams& p, WIterModel model, bool with_optimal,
                                    std::size_t lp_cap = 2000);

void write_sweep_header(std::ostream& os);
void write_sweep_row(std::ostream& os, const WorkFactorReport& r);

} // namespace sumrank
