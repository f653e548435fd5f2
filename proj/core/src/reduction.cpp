#include "sumrank/reduction.hpp"

#include <algorithm>
#include <mutex>
#include <thread>

#include "sumrank/sampling.hpp"

namespace sumrank {

LiftedInstance lift_instance(const FqMatrix& h, const FieldContext& ctx, Rng& rng)
{
    LiftedInstance out;
    out.h = ctx.embed(h);
    const FiniteField& f = ctx.ext();
    out.beta.resize(h.cols());
    for (auto& b : out.beta) b = 1 + rng.below(f.order() - 1);
    for (std::size_t r = 0; r < h.rows(); ++r)
        for (std::size_t c = 0; c < h.cols(); ++c) out.h(r, c) = f.mul(out.h(r, c), out.beta[c]);
    return out;
}

namespace {

// Enumerates {x : a x^T = s} restricted to the nonzero columns of a and
// returns the minimum of weight(x), stopping early once it reaches `stop`.
template <class Tag, class Weight>
std::optional<int> min_coset(const FiniteField& f, const Matrix<Tag>& a, std::span<const Elem> s,
                             std::uint64_t budget, int stop, Weight weight)
{
    if (s.size() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "syndrome length must equal rows of H");
    std::vector<std::size_t> active;
    for (std::size_t c = 0; c < a.cols(); ++c)
        for (std::size_t r = 0; r < a.rows(); ++r)
            if (a(r, c) != 0) {
                active.push_back(c);
                break;
            }
    Matrix<Tag> red(a.rows(), active.size());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t j = 0; j < active.size(); ++j) red(r, j) = a(r, active[j]);

    ElemVector x0(active.size(), 0);
    if (!active.empty()) {
        SolveResult sol = solve_linear(f, red, s);
        if (!sol.consistent()) return std::nullopt;
        x0 = sol.x;
    } else if (std::any_of(s.begin(), s.end(), [](Elem v) { return v != 0; })) {
        return std::nullopt;
    }
    Matrix<Tag> ker = active.empty() ? Matrix<Tag>() : right_kernel(f, red);
    const std::size_t d = ker.rows();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < d; ++i) {
        if (total > budget / f.order()) throw Error(ErrorCode::TooLarge, "coset too large to enumerate");
        total *= f.order();
    }

    ElemVector coef(d, 0);
    ElemVector x(a.cols(), 0);
    int best = -1;
    for (std::uint64_t it = 0; it < total; ++it) {
        std::uint64_t v = it;
        for (std::size_t i = 0; i < d; ++i) {
            coef[i] = v % f.order();
            v /= f.order();
        }
        for (std::size_t j = 0; j < active.size(); ++j) {
            Elem e = x0[j];
            for (std::size_t i = 0; i < d; ++i)
                if (coef[i] != 0) e = f.add(e, f.mul(coef[i], ker(i, j)));
            x[active[j]] = e;
        }
        int w = weight(x);
        if (best < 0 || w < best) best = w;
        if (best <= stop) break;
    }
    return best;
}

} // namespace

std::optional<int> sr_min_coset_weight(const FieldContext& ctx, const SumRankParams& params, const FqmMatrix& h,
                                       std::span<const Elem> s, std::uint64_t budget)
{
    if (h.cols() != static_cast<std::size_t>(params.n))
        throw Error(ErrorCode::DimensionMismatch, "H must have n columns");
    return min_coset(ctx.ext(), h, s, budget, 0, [&](const ElemVector& x) {
        return sum_rank_weight(ctx, BlockVector(params, x));
    });
}

std::optional<int> hamming_min_coset_weight(const FieldContext& ctx, const FqMatrix& h, std::span<const Elem> s,
                                            std::uint64_t budget)
{
    return min_coset(ctx.base(), h, s, budget, 0, [](const ElemVector& x) { return hamming_weight(x); });
}

bool sr_decision_oracle_bruteforce(const FieldContext& ctx, const SumRankParams& params, const FqmMatrix& h,
                                   std::span<const Elem> s, int t, std::uint64_t budget)
{
    if (h.cols() != static_cast<std::size_t>(params.n))
        throw Error(ErrorCode::DimensionMismatch, "H must have n columns");
    auto w = min_coset(ctx.ext(), h, s, budget, t, [&](const ElemVector& x) {
        return sum_rank_weight(ctx, BlockVector(params, x));
    });
    return w && *w <= t;
}

SrOracle bruteforce_oracle(std::uint64_t budget)
{
    return [budget](const FieldContext& ctx, const SumRankParams& p, const FqmMatrix& h, std::span<const Elem> s,
                    int t, Rng&) { return sr_decision_oracle_bruteforce(ctx, p, h, s, t, budget); };
}

SrOracle noisy_oracle(SrOracle exact, double false_negative_rate, int repeats)
{
    if (repeats < 1) throw Error(ErrorCode::InvalidParams, "repeats must be positive");
    if (false_negative_rate < 0 || false_negative_rate > 1)
        throw Error(ErrorCode::InvalidParams, "false-negative rate must lie in [0, 1]");
    return [exact = std::move(exact), false_negative_rate, repeats](const FieldContext& ctx, const SumRankParams& p,
                                                                    const FqmMatrix& h, std::span<const Elem> s,
                                                                    int t, Rng& rng) {
        if (!exact(ctx, p, h, s, t, rng)) return false;
        for (int i = 0; i < repeats; ++i)
            if (rng.uniform01() >= false_negative_rate) return true;
        return false;
    };
}

bool hamming_decision_corp(const FqMatrix& h, std::span<const Elem> s, int t, const SrOracle& oracle,
                           const FieldContext& ctx, const SumRankParams& params, Rng& rng)
{
    LiftedInstance lifted = lift_instance(h, ctx, rng);
    return oracle(ctx, params, lifted.h, s, t, rng);
}

bool verify_hamming_witness(const FieldContext& ctx, const FqMatrix& h, std::span<const Elem> s,
                            std::span<const Elem> x, int t)
{
    if (x.size() != h.cols() || s.size() != h.rows()) return false;
    if (hamming_weight(x) > t) return false;
    ElemVector hx = multiply(ctx.base(), h, x);
    return std::equal(hx.begin(), hx.end(), s.begin());
}

RpOutcome hamming_decision_rp(const FqMatrix& h, std::span<const Elem> s, int t, const SrOracle& oracle,
                              const FieldContext& ctx, const SumRankParams& params, Rng& rng)
{
    const std::size_t n = h.cols();
    std::vector<bool> in_s(n, true);
    RpOutcome out;
    for (std::size_t i = 0; i < n; ++i) {
        if (!in_s[i]) continue;
        FqMatrix bar = h;
        for (std::size_t c = 0; c < n; ++c)
            if (!in_s[c] || c == i)
                for (std::size_t r = 0; r < h.rows(); ++r) bar(r, c) = 0;
        LiftedInstance lifted = lift_instance(bar, ctx, rng);
        ++out.oracle_calls;
        if (oracle(ctx, params, lifted.h, s, t, rng)) in_s[i] = false;
    }
    for (std::size_t c = 0; c < n; ++c)
        if (in_s[c]) out.support.push_back(static_cast<int>(c));
    if (static_cast<int>(out.support.size()) > t) return out;

    FqMatrix keep(h.rows(), out.support.size());
    for (std::size_t r = 0; r < h.rows(); ++r)
        for (std::size_t j = 0; j < out.support.size(); ++j) keep(r, j) = h(r, static_cast<std::size_t>(out.support[j]));
    ElemVector x(n, 0);
    if (!out.support.empty()) {
        SolveResult sol = solve_linear(ctx.base(), keep, s);
        if (!sol.consistent()) return out;
        for (std::size_t j = 0; j < out.support.size(); ++j) x[static_cast<std::size_t>(out.support[j])] = sol.x[j];
    }
    if (!verify_hamming_witness(ctx, h, s, x, t)) return out;
    out.answer = true;
    out.witness = std::move(x);
    return out;
}

ReductionDemoReport run_reduction_demo(const ReductionDemoConfig& cfg)
{
    if (cfg.k < 0 || cfg.k >= cfg.n) throw Error(ErrorCode::InvalidDims, "need 0 <= k < n");
    if (cfg.t < 0 || cfg.t > cfg.n) throw Error(ErrorCode::InvalidWeight, "need 0 <= t <= n");
    if (cfg.trials < 0) throw Error(ErrorCode::InvalidParams, "trials must be nonnegative");
    const FieldContext ctx = make_field(cfg.q, static_cast<unsigned>(cfg.m));
    const SumRankParams params = make_params(cfg.n, cfg.ell, cfg.m);
    const SrOracle oracle = cfg.false_negative_rate > 0
                                ? noisy_oracle(bruteforce_oracle(), cfg.false_negative_rate, cfg.repeats)
                                : bruteforce_oracle();
    const Rng root(cfg.seed);
    const int rows = cfg.n - cfg.k;

    ReductionDemoReport total;
    total.trials = cfg.trials;
    std::mutex mu;
    auto run_one = [&](int trial) {
        Rng rng = root.split(static_cast<std::uint64_t>(trial));
        ReductionDemoReport r;
        FqMatrix h = sample_full_rank_matrix(rows, cfg.n, ctx.base(), rng);

        ElemVector x(static_cast<std::size_t>(cfg.n), 0);
        std::vector<int> pos(static_cast<std::size_t>(cfg.n));
        for (int i = 0; i < cfg.n; ++i) pos[static_cast<std::size_t>(i)] = i;
        rng.shuffle(pos);
        for (int i = 0; i < cfg.t; ++i) x[static_cast<std::size_t>(pos[static_cast<std::size_t>(i)])] = 1 + rng.below(cfg.q - 1);
        ElemVector s = multiply(ctx.base(), h, std::span<const Elem>(x));

        RpOutcome rp = hamming_decision_rp(h, s, cfg.t, oracle, ctx, params, rng);
        r.oracle_calls += rp.oracle_calls;
        if (rp.answer) {
            ++r.rp_true;
            if (!verify_hamming_witness(ctx, h, s, rp.witness, cfg.t)) ++r.rp_unverified_true;
        }
        r.oracle_calls += 1;
        if (hamming_decision_corp(h, s, cfg.t, oracle, ctx, params, rng)) ++r.corp_true_on_positive;

        // Negative instance: the first of a few random syndromes whose Hamming
        // distance exceeds t.
        for (int attempt = 0; attempt < 16; ++attempt) {
            ElemVector sn(static_cast<std::size_t>(rows));
            for (auto& v : sn) v = rng.below(cfg.q);
            auto wh = hamming_min_coset_weight(ctx, h, sn);
            if (!wh || *wh <= cfg.t) continue;
            ++r.negatives;
            r.oracle_calls += 1;
            if (!hamming_decision_corp(h, sn, cfg.t, oracle, ctx, params, rng)) ++r.corp_false_on_negative;
            break;
        }

        // Weight bridge on one fresh lift of the positive instance.
        LiftedInstance lifted = lift_instance(h, ctx, rng);
        auto wh = hamming_min_coset_weight(ctx, h, s);
        auto wsr = sr_min_coset_weight(ctx, params, lifted.h, s);
        if (wh && wsr) {
            ++r.lifts;
            if (*wsr == *wh) ++r.weight_preserved;
        }

        std::lock_guard<std::mutex> lock(mu);
        total.rp_true += r.rp_true;
        total.rp_unverified_true += r.rp_unverified_true;
        total.corp_true_on_positive += r.corp_true_on_positive;
        total.negatives += r.negatives;
        total.corp_false_on_negative += r.corp_false_on_negative;
        total.lifts += r.lifts;
        total.weight_preserved += r.weight_preserved;
        total.oracle_calls += r.oracle_calls;
    };

    const unsigned threads = std::max(1u, cfg.threads);
    std::vector<std::thread> pool;
    std::mutex next_mu;
    int next = 0;
    auto worker = [&] {
        for (;;) {
            int trial;
            {
                std::lock_guard<std::mutex> lock(next_mu);
                if (next >= cfg.trials) return;
                trial = next++;
            }
            run_one(trial);
        }
    };
    for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    return total;
}

} // namespace sumrank
