#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

#include "sumrank/bigint.hpp"
#include "sumrank/rng.hpp"
#include "sumrank/srspace.hpp"

namespace sumrank {

// Spreads s - sum(t) extra dimensions over t: each step raises, among entries
// below zeta, one with maximal t_i and then minimal s_i, chosen uniformly.
// Throws InfeasibleTarget unless sum(t) <= s <= ell * zeta.
IntVector scomp(const IntVector& t, int s, int zeta, Rng& rng);
// Same, picking the first candidate instead of a random one. The multiset of
// (t_i, s_i) pairs matches every randomized outcome.
IntVector scomp_first(const IntVector& t, int s, int zeta);

// prod [s_i t_i]_q / [zeta t_i]_q.
BigRational rho(const IntVector& s, const IntVector& t, std::uint64_t q, int zeta);
// rho(scomp(t, s), t).
BigRational rho_s(const IntVector& t, int s, std::uint64_t q, int zeta);

// Lazily memoized M(t', ell', mu', s') with mu' in [-1, mu].
class MTable {
public:
    // Throws InfeasibleParams unless t <= s <= ell * zeta, t <= ell * mu, 0 <= mu <= zeta.
    MTable(std::uint64_t q, int zeta, int t, int ell, int mu, int s);

    BigRational get(int tp, int lp, int mup, int sp) const;
    // ell! * M(t, ell, mu, s).
    BigRational q_value() const;
    // (1/delta!) [zeta t1]^delta / prod_i [c_i t1] where c spreads `budget` evenly over delta entries.
    BigRational block_factor(int t1, int delta, int budget) const;
    const BigInt& gauss(int a, int b) const;

    std::uint64_t q() const noexcept { return q_; }
    int zeta() const noexcept { return zeta_; }
    int t() const noexcept { return t_; }
    int ell() const noexcept { return ell_; }
    int mu() const noexcept { return mu_; }
    int s() const noexcept { return s_; }

private:
    const BigRational& get_locked(int tp, int lp, int mup, int sp) const;
    std::size_t index(int tp, int lp, int mup, int sp) const;

    std::uint64_t q_;
    int zeta_, t_, ell_, mu_, s_;
    std::vector<BigInt> gauss_; // (zeta+1)^2
    mutable std::recursive_mutex mutex_;
    mutable std::vector<BigRational> values_;
    mutable std::vector<char> known_;
    mutable std::map<std::tuple<int, int, int>, BigRational> factors_;
};

class SupportDistribution {
public:
    SupportDistribution(std::uint64_t q, int zeta, int t, int ell, int mu, int s);

    const MTable& table() const noexcept { return *table_; }
    const BigRational& q_value() const noexcept { return q_; }
    // ell! * (prod_{t'<=mu} prod_{t'<=s'<=zeta} [s' t'])^ell; iota * Q is an integer.
    const BigInt& iota() const noexcept { return iota_; }

    // Sum over non-increasing completions of the prefix of (ell!/prod delta_i!) / rho_s.
    // Throws InvalidPrefix when the prefix is unsorted, out of range or has no completion.
    BigRational prefix_sum(const IntVector& prefix) const;
    // As prefix_sum but returns 0 instead of throwing.
    BigRational prefix_weight(const IntVector& prefix) const;

    // p_t = rho_s(t)^-1 / Q.
    BigRational probability(const IntVector& t) const;

    std::uint64_t q() const noexcept { return table_->q(); }
    int zeta() const noexcept { return table_->zeta(); }
    int t() const noexcept { return table_->t(); }
    int ell() const noexcept { return table_->ell(); }
    int mu() const noexcept { return table_->mu(); }
    int s() const noexcept { return table_->s(); }

private:
    std::shared_ptr<const MTable> table_;
    BigRational q_;
    BigInt iota_;
};

WeightDecomposition draw_decomposition(const SupportDistribution& dist, Rng& rng);

SumRankSupport draw_random_support(const SupportDistribution& dist, SupportKind kind, const FiniteField& base,
                                   Rng& rng);
// Builds the distribution with mu = zeta when mu < 0. Requires t <= s <= ell * mu.
SumRankSupport draw_random_support(int s, int t, int zeta, int ell, const FiniteField& base, SupportKind kind,
                                   Rng& rng, int mu = -1);

} // namespace sumrank
