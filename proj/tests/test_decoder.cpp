#include <doctest.h>

#include <sstream>

#include "sumrank/counting.hpp"
#include "sumrank/decoder.hpp"
#include "sumrank/sampling.hpp"

using namespace sumrank;

TEST_CASE("default support size and kind")
{
    auto p = make_params(6, 2, 4);
    CHECK(default_support_size(p, 2) == std::min({4, 4 * 4 / 3, 2 * 3}));
    CHECK(resolve_kind(p, DecodeKind::Auto) == SupportKind::Row);
    CHECK(resolve_kind(make_params(6, 1, 4), DecodeKind::Auto) == SupportKind::Column);
    CHECK(resolve_kind(p, DecodeKind::Column) == SupportKind::Column);
}

TEST_CASE("generic decoder returns the planted error")
{
    for (auto [q, m, n, ell, k, t] : {std::tuple{2u, 4u, 6, 2, 2, 1}, {2, 3, 6, 3, 2, 1}, {3, 2, 4, 2, 1, 1},
                                      {2, 6, 6, 1, 2, 1}, {2, 2, 8, 8, 3, 1}}) {
        auto ctx = make_field(q, m);
        auto p = make_params(n, ell, static_cast<int>(m));
        Rng rng(q * 31 + m);
        LinearCode c = random_code(k, p, ctx, rng);
        const int d = min_distance_bruteforce(c);
        if (2 * t >= d) continue;
        for (int trial = 0; trial < 20; ++trial) {
            BlockVector e = sample_uniform_error(t, p, ctx, rng);
            BlockVector r = random_codeword(c, rng);
            for (std::size_t i = 0; i < r.entries.size(); ++i) r.entries[i] = ctx.ext().add(r.entries[i], e.entries[i]);
            DecodeOutcome out = generic_decode(ctx, p, c.H, r, t, DecodeConfig{}, rng);
            CHECK(out.success);
            CHECK(out.e == e);
            CHECK(out.iterations >= 1);
            CHECK(out.iterations == 1 + out.miss + out.nonunique + out.weight_excess);
        }
    }
}

TEST_CASE("iteration cap")
{
    auto ctx = make_field(2, 4);
    auto p = make_params(8, 8, 4);
    Rng rng(3);
    LinearCode c = random_code(4, p, ctx, rng);
    BlockVector r(p);
    for (auto& x : r.entries) x = 1;
    DecodeConfig cfg;
    cfg.max_iterations = 5;
    cfg.s = 1;
    try {
        generic_decode(ctx, p, c.H, r, 0, cfg, rng);
        FAIL("expected a throw");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::IterationCapExceeded);
    }
}

TEST_CASE("experiments are reproducible and thread-count independent")
{
    auto ctx = make_field(2, 4);
    auto p = make_params(4, 2, 4);
    Rng rng(9);
    LinearCode c = random_code(1, p, ctx, rng);
    DecodeConfig cfg;
    cfg.s = 2;
    ExperimentStats a = run_experiment(c, 1, 64, cfg, 77, 1);
    ExperimentStats b = run_experiment(c, 1, 64, cfg, 77, 4);
    REQUIRE(a.trials.size() == 64);
    for (std::size_t i = 0; i < 64; ++i) {
        CHECK(a.trials[i].outcome.iterations == b.trials[i].outcome.iterations);
        CHECK(a.trials[i].outcome.e == b.trials[i].outcome.e);
    }
    CHECK(a.successes() == 64);
    CHECK(a.mean_iterations() == doctest::Approx(static_cast<double>(a.total_iterations()) / 64));
    CHECK(a.success_probability() == doctest::Approx(64.0 / static_cast<double>(a.total_iterations())));
    std::ostringstream os;
    write_experiment_csv(os, a);
    CHECK(os.str().rfind("seed,trial,iterations,success,miss,nonunique,weight_excess\n", 0) == 0);
    std::size_t lines = 0;
    for (char ch : os.str()) lines += ch == '\n';
    CHECK(lines == 65);
}

TEST_CASE("decoder distribution uses the support kind's ambient dimension")
{
    auto ctx = make_field(2, 5);
    auto p = make_params(6, 2, 5);
    SupportDistribution row = decoder_distribution(ctx, p, 2, 3, SupportKind::Row);
    SupportDistribution col = decoder_distribution(ctx, p, 2, 3, SupportKind::Column);
    CHECK(row.zeta() == 3);
    CHECK(col.zeta() == 5);
    CHECK(row.mu() == 3);
}
