#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>

#include "sumrank/ffalg.hpp"
#include "sumrank/rng.hpp"
#include "sumrank/srspace.hpp"

namespace sumrank {

struct LiftedInstance {
    FqmMatrix h;       // H diag(beta)
    ElemVector beta;   // nonzero elements of GF(q^m)
};

// beta uniform in (GF(q^m)*)^n.
LiftedInstance lift_instance(const FqMatrix& h, const FieldContext& ctx, Rng& rng);

// Minimum sum-rank weight over {x : H x^T = s}, or nullopt if the system is
// inconsistent. Zero columns of H are pinned to zero in x. Throws TooLarge when
// the coset has more than `budget` elements.
std::optional<int> sr_min_coset_weight(const FieldContext& ctx, const SumRankParams& params, const FqmMatrix& h,
                                       std::span<const Elem> s, std::uint64_t budget = 1ULL << 22);

// Same over GF(q) with the Hamming weight.
std::optional<int> hamming_min_coset_weight(const FieldContext& ctx, const FqMatrix& h, std::span<const Elem> s,
                                            std::uint64_t budget = 1ULL << 22);

bool sr_decision_oracle_bruteforce(const FieldContext& ctx, const SumRankParams& params, const FqmMatrix& h,
                                   std::span<const Elem> s, int t, std::uint64_t budget = 1ULL << 22);

// Decision oracle for the sum-rank problem. May consume randomness.
using SrOracle = std::function<bool(const FieldContext&, const SumRankParams&, const FqmMatrix&,
                                    std::span<const Elem>, int, Rng&)>;

SrOracle bruteforce_oracle(std::uint64_t budget = 1ULL << 22);

// Wraps an exact oracle: a true answer is flipped to false with probability
// `false_negative_rate`, and the query is repeated `repeats` times with the
// answers OR-ed.
SrOracle noisy_oracle(SrOracle exact, double false_negative_rate, int repeats = 1);

// Lifts H and queries the oracle once.
bool hamming_decision_corp(const FqMatrix& h, std::span<const Elem> s, int t, const SrOracle& oracle,
                           const FieldContext& ctx, const SumRankParams& params, Rng& rng);

struct RpOutcome {
    bool answer = false;
    ElemVector witness; // set when answer is true; H x^T = s and wt_H(x) <= t
    std::vector<int> support;
    int oracle_calls = 0;
};

// Support peeling: for each column, drop it, lift the rest with fresh beta
// and keep it dropped if the oracle still answers true. Dropped columns are
// zeroed rather than removed so the block structure stays intact. Returns
// true only with a verified witness.
RpOutcome hamming_decision_rp(const FqMatrix& h, std::span<const Elem> s, int t, const SrOracle& oracle,
                              const FieldContext& ctx, const SumRankParams& params, Rng& rng);

// Checks H x^T = s over GF(q) and wt_H(x) <= t.
bool verify_hamming_witness(const FieldContext& ctx, const FqMatrix& h, std::span<const Elem> s,
                            std::span<const Elem> x, int t);

struct ReductionDemoConfig {
    std::uint64_t q = 2;
    int n = 4, ell = 2, m = 8, k = 1, t = 1;
    int trials = 100;
    std::uint64_t seed = 1;
    double false_negative_rate = 0.0;
    int repeats = 1;
    unsigned threads = 1;
};

struct ReductionDemoReport {
    int trials = 0;
    int rp_true = 0;
    int rp_unverified_true = 0;
    int corp_true_on_positive = 0;
    int negatives = 0;            // negative instances generated
    int corp_false_on_negative = 0;
    int lifts = 0;                // lifts compared by enumeration
    int weight_preserved = 0;     // lifts with min wt_SR == min wt_H
    long oracle_calls = 0;

    double rp_success_rate() const { return trials ? static_cast<double>(rp_true) / trials : 0.0; }
    double weight_preservation() const { return lifts ? static_cast<double>(weight_preserved) / lifts : 0.0; }
    double corp_negative_false_rate() const
    {
        return negatives ? static_cast<double>(corp_false_on_negative) / negatives : 0.0;
    }
};

// Each trial draws a random full-rank H in GF(q)^{(n-k) x n} and a positive
// instance s = H x^T with wt_H(x) = t, and a negative instance (a random
// syndrome with min wt_H > t, when one exists).
ReductionDemoReport run_reduction_demo(const ReductionDemoConfig& cfg);

} // namespace sumrank
