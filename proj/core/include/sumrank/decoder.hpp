#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "sumrank/codes.hpp"
#include "sumrank/distribution.hpp"

namespace sumrank {

// Which super-support to guess. Row supports use column erasure decoding.
enum class DecodeKind { Auto, Row, Column };

struct DecodeConfig {
    int s = -1; // <0: min(n-k, floor(m/eta (n-k)), ell*mu)
    std::optional<std::uint64_t> max_iterations;
    DecodeKind kind = DecodeKind::Auto;
};

struct DecodeOutcome {
    BlockVector e;
    bool success = false;
    std::uint64_t iterations = 0;
    std::uint64_t miss = 0;          // inconsistent system
    std::uint64_t nonunique = 0;     // rank-deficient system
    std::uint64_t weight_excess = 0; // solution heavier than t
};

int default_support_size(const SumRankParams& params, int k);
SupportKind resolve_kind(const SumRankParams& params, DecodeKind kind);

// Support distribution used by the decoder for (params, t, s, kind).
SupportDistribution decoder_distribution(const FieldContext& ctx, const SumRankParams& params, int t, int s,
                                         SupportKind kind);

// Repeats guess-and-erasure-decode until H(r-e')^T = 0 and wt(e') <= t.
// Throws IterationCapExceeded when the cap is reached.
DecodeOutcome generic_decode(const FieldContext& ctx, const SumRankParams& params, const FqmMatrix& H,
                             const BlockVector& r, int t, const DecodeConfig& cfg, Rng& rng,
                             const SupportDistribution* dist = nullptr);

struct TrialRecord {
    std::uint64_t trial = 0;
    DecodeOutcome outcome;
    bool exact = false; // returned error equals the planted one
};

struct ExperimentStats {
    std::uint64_t seed = 0;
    int t = 0;
    int s = 0;
    SupportKind kind = SupportKind::Row;
    std::vector<TrialRecord> trials;

    std::uint64_t successes() const;
    std::uint64_t total_iterations() const;
    double mean_iterations() const;
    double variance_iterations() const;
    double standard_error() const;
    // successes / iterations over all trials.
    double success_probability() const;
    double success_probability_stderr() const;
};

// Plants uniform errors of weight t on random codewords and decodes them.
// Trial i uses Rng(seed).split(i), so results do not depend on `threads`.
ExperimentStats run_experiment(const LinearCode& code, int t, std::uint64_t trials, const DecodeConfig& cfg,
                               std::uint64_t seed, unsigned threads = 1);

void write_experiment_csv(std::ostream& os, const ExperimentStats& stats);

} // namespace sumrank
