#include "sumrank/decoder.hpp"

#include <atomic>
#include <cmath>
#include <ostream>
#include <thread>

#include "sumrank/sampling.hpp"

namespace sumrank {

int default_support_size(const SumRankParams& params, int k)
{
    const int r = params.n - k;
    const int scaled = static_cast<int>((static_cast<long>(params.m) * r) / params.eta);
    return std::min({r, scaled, params.ell * params.mu()});
}

SupportKind resolve_kind(const SumRankParams& params, DecodeKind kind)
{
    switch (kind) {
    case DecodeKind::Row: return SupportKind::Row;
    case DecodeKind::Column: return SupportKind::Column;
    case DecodeKind::Auto: break;
    }
    return params.eta <= params.m ? SupportKind::Row : SupportKind::Column;
}

SupportDistribution decoder_distribution(const FieldContext& ctx, const SumRankParams& params, int t, int s,
                                         SupportKind kind)
{
    const int mu = params.mu();
    if (t < 0 || t > s || s > params.ell * mu)
        throw Error(ErrorCode::InvalidParams, "need 0 <= t <= s <= ell * mu");
    return SupportDistribution(ctx.q(), params.zeta(kind), t, params.ell, mu, s);
}

namespace {

DecodeOutcome decode_loop(const FieldContext& ctx, const SumRankParams& params, const FqmMatrix& H,
                          const BlockVector& r, int t, const DecodeConfig& cfg, Rng& rng,
                          const SupportDistribution& dist, SupportKind kind)
{
    DecodeOutcome out;
    for (;;) {
        if (cfg.max_iterations && out.iterations >= *cfg.max_iterations) return out;
        ++out.iterations;
        SumRankSupport f = draw_random_support(dist, kind, ctx.base(), rng);
        ErasureResult res = erasure_decode(ctx, params, H, r, f);
        if (res.status == ErasureStatus::NoSolution) {
            ++out.miss;
            continue;
        }
        if (res.status == ErasureStatus::NonUnique) {
            ++out.nonunique;
            continue;
        }
        if (sum_rank_weight(ctx, res.e) > t) {
            ++out.weight_excess;
            continue;
        }
        out.e = std::move(res.e);
        out.success = true;
        return out;
    }
}

} // namespace

DecodeOutcome generic_decode(const FieldContext& ctx, const SumRankParams& params, const FqmMatrix& H,
                             const BlockVector& r, int t, const DecodeConfig& cfg, Rng& rng,
                             const SupportDistribution* dist)
{
    const int k = params.n - static_cast<int>(H.rows());
    const int s = cfg.s >= 0 ? cfg.s : default_support_size(params, k);
    const SupportKind kind = resolve_kind(params, cfg.kind);
    if (t > s) throw Error(ErrorCode::InvalidParams, "t must not exceed s");
    std::optional<SupportDistribution> local;
    if (!dist) {
        local.emplace(decoder_distribution(ctx, params, t, s, kind));
        dist = &*local;
    }
    DecodeOutcome out = decode_loop(ctx, params, H, r, t, cfg, rng, *dist, kind);
    if (!out.success) throw Error(ErrorCode::IterationCapExceeded, "iteration cap reached");
    return out;
}

std::uint64_t ExperimentStats::successes() const
{
    std::uint64_t n = 0;
    for (const auto& tr : trials) n += tr.outcome.success;
    return n;
}

std::uint64_t ExperimentStats::total_iterations() const
{
    std::uint64_t n = 0;
    for (const auto& tr : trials) n += tr.outcome.iterations;
    return n;
}

double ExperimentStats::mean_iterations() const
{
    if (trials.empty()) return 0;
    return static_cast<double>(total_iterations()) / static_cast<double>(trials.size());
}

double ExperimentStats::variance_iterations() const
{
    if (trials.size() < 2) return 0;
    const double mean = mean_iterations();
    double acc = 0;
    for (const auto& tr : trials) {
        const double d = static_cast<double>(tr.outcome.iterations) - mean;
        acc += d * d;
    }
    return acc / static_cast<double>(trials.size() - 1);
}

double ExperimentStats::standard_error() const
{
    if (trials.empty()) return 0;
    return std::sqrt(variance_iterations() / static_cast<double>(trials.size()));
}

double ExperimentStats::success_probability() const
{
    const std::uint64_t it = total_iterations();
    return it == 0 ? 0.0 : static_cast<double>(successes()) / static_cast<double>(it);
}

double ExperimentStats::success_probability_stderr() const
{
    const std::uint64_t it = total_iterations();
    if (it == 0) return 0;
    const double p = success_probability();
    return std::sqrt(p * (1 - p) / static_cast<double>(it));
}

ExperimentStats run_experiment(const LinearCode& code, int t, std::uint64_t trials, const DecodeConfig& cfg,
                               std::uint64_t seed, unsigned threads)
{
    if (trials == 0) throw Error(ErrorCode::InvalidParams, "trials must be positive");
    const SumRankParams& params = code.params;
    const int s = cfg.s >= 0 ? cfg.s : default_support_size(params, code.k);
    const SupportKind kind = resolve_kind(params, cfg.kind);
    if (t > s) throw Error(ErrorCode::InvalidParams, "t must not exceed s");
    const SupportDistribution dist = decoder_distribution(code.ctx, params, t, s, kind);
    const SphereTable table(code.ctx.q(), params.eta, params.m, t, params.ell);

    ExperimentStats stats;
    stats.seed = seed;
    stats.t = t;
    stats.s = s;
    stats.kind = kind;
    stats.trials.resize(trials);
    const Rng root(seed);
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::uint64_t i = next.fetch_add(1);
            if (i >= trials) return;
            Rng rng = root.split(i);
            BlockVector c = random_codeword(code, rng);
            BlockVector e = sample_uniform_error(t, params, code.ctx, rng, &table);
            BlockVector r(params);
            for (int j = 0; j < params.n; ++j) r.entries[j] = code.ctx.ext().add(c.entries[j], e.entries[j]);
            TrialRecord rec;
            rec.trial = i;
            rec.outcome = decode_loop(code.ctx, params, code.H, r, t, cfg, rng, dist, kind);
            rec.exact = rec.outcome.success && rec.outcome.e == e;
            stats.trials[i] = std::move(rec);
        }
    };
    threads = std::max(1u, threads);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return stats;
}

void write_experiment_csv(std::ostream& os, const ExperimentStats& stats)
{
    os << "seed,trial,iterations,success,miss,nonunique,weight_excess\n";
    for (const auto& tr : stats.trials)
        os << stats.seed << ',' << tr.trial << ',' << tr.outcome.iterations << ',' << (tr.outcome.success ? 1 : 0)
           << ',' << tr.outcome.miss << ',' << tr.outcome.nonunique << ',' << tr.outcome.weight_excess << '\n';
}

} // namespace sumrank
