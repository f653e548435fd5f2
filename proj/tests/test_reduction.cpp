#include <doctest.h>

#include "oracles.hpp"
#include "sumrank/reduction.hpp"
#include "sumrank/sampling.hpp"

using namespace sumrank;

namespace {

// Minimum sum-rank weight of {x : H x^T = s} by enumerating all of GF(q^m)^n.
std::optional<int> full_enumeration(const FieldContext& ctx, int ell, const FqmMatrix& h, const ElemVector& s)
{
    std::optional<int> best;
    oracle::for_each_vector(h.cols(), ctx.ext().order(), [&](const ElemVector& x) {
        if (multiply(ctx.ext(), h, std::span<const Elem>(x)) != s) return;
        const int w = oracle::sum_rank_weight(ctx, x, ell);
        if (!best || w < *best) best = w;
    });
    return best;
}

} // namespace

TEST_CASE("lifting scales columns by nonzero elements")
{
    auto ctx = make_field(2, 4);
    Rng rng(1);
    FqMatrix h = sample_full_rank_matrix(2, 4, ctx.base(), rng);
    LiftedInstance l = lift_instance(h, ctx, rng);
    REQUIRE(l.beta.size() == 4);
    for (std::size_t c = 0; c < 4; ++c) {
        CHECK(l.beta[c] != 0);
        for (std::size_t r = 0; r < 2; ++r) CHECK(l.h(r, c) == ctx.ext().mul(h(r, c), l.beta[c]));
    }
    CHECK(rank(ctx.ext(), l.h) == 2);
    Rng a(5), b(5);
    CHECK(lift_instance(h, ctx, a).h == lift_instance(h, ctx, b).h);

    auto f2 = make_field(2, 1);
    LiftedInstance trivial = lift_instance(h, f2, rng);
    CHECK(trivial.h == f2.embed(h));
}

TEST_CASE("coset minimum agrees with full enumeration")
{
    auto ctx = make_field(2, 2);
    auto p = make_params(4, 2, 2);
    Rng rng(2);
    for (int trial = 0; trial < 20; ++trial) {
        FqmMatrix h(2, 4);
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 4; ++c) h(r, c) = rng.below(3) ? uniform_element(ctx.ext(), rng) : 0;
        ElemVector s{uniform_element(ctx.ext(), rng), uniform_element(ctx.ext(), rng)};
        CHECK(sr_min_coset_weight(ctx, p, h, s) == full_enumeration(ctx, 2, h, s));
        for (int t = 0; t <= 4; ++t) {
            auto best = full_enumeration(ctx, 2, h, s);
            CHECK(sr_decision_oracle_bruteforce(ctx, p, h, s, t) == (best && *best <= t));
        }
    }
}

TEST_CASE("oracle edge cases")
{
    auto ctx = make_field(2, 3);
    auto p = make_params(4, 2, 3);
    Rng rng(3);
    FqmMatrix h = ctx.embed(sample_full_rank_matrix(2, 4, ctx.base(), rng));
    ElemVector zero{0, 0};
    CHECK(sr_decision_oracle_bruteforce(ctx, p, h, zero, 0));
    ElemVector s{1, 3};
    CHECK(sr_decision_oracle_bruteforce(ctx, p, h, s, 4));
    CHECK_FALSE(sr_decision_oracle_bruteforce(ctx, p, h, s, 0));

    // H = [1 0 1 0; 0 1 0 1] and s = H (a, a^2, 0, 0)^T: the minimum weight is 2.
    FqmMatrix h2(2, 4, {1, 0, 1, 0, 0, 1, 0, 1});
    const Elem a = ctx.basis_element(1), a2 = ctx.basis_element(2);
    ElemVector s2 = multiply(ctx.ext(), h2, ElemVector{a, a2, 0, 0});
    CHECK(sr_min_coset_weight(ctx, p, h2, s2) == full_enumeration(ctx, 2, h2, s2));
    CHECK(*sr_min_coset_weight(ctx, p, h2, s2) == 2);
    CHECK_FALSE(sr_decision_oracle_bruteforce(ctx, p, h2, s2, 1));
    CHECK(sr_decision_oracle_bruteforce(ctx, p, h2, s2, 2));

    FqmMatrix zero_h(2, 4);
    CHECK_FALSE(sr_decision_oracle_bruteforce(ctx, p, zero_h, s, 4));
    CHECK(sr_decision_oracle_bruteforce(ctx, p, zero_h, zero, 0));

    auto big = make_field(2, 12);
    FqmMatrix wide(1, 4, {1, 1, 1, 1});
    ElemVector one{1};
    CHECK_THROWS_AS(sr_decision_oracle_bruteforce(big, make_params(4, 2, 12), wide, one, 1), Error);
}

TEST_CASE("weight bridge: lifted sum-rank minimum never exceeds the Hamming minimum")
{
    auto ctx = make_field(2, 4);
    auto p = make_params(4, 2, 4);
    Rng rng(4);
    for (int trial = 0; trial < 40; ++trial) {
        FqMatrix h = sample_full_rank_matrix(2, 4, ctx.base(), rng);
        ElemVector s{rng.below(2), rng.below(2)};
        auto wh = hamming_min_coset_weight(ctx, h, s);
        REQUIRE(wh);
        LiftedInstance l = lift_instance(h, ctx, rng);
        auto wsr = sr_min_coset_weight(ctx, p, l.h, s);
        REQUIRE(wsr);
        CHECK(*wsr <= *wh);
    }
}

TEST_CASE("coRP wrapper")
{
    auto ctx = make_field(2, 8);
    auto p = make_params(4, 2, 8);
    Rng rng(5);
    SrOracle oracle = bruteforce_oracle();
    int negatives = 0, false_answers = 0;
    for (int trial = 0; trial < 100; ++trial) {
        FqMatrix h = sample_full_rank_matrix(3, 4, ctx.base(), rng);
        ElemVector x{0, 0, 0, 0};
        x[rng.below(4)] = 1;
        ElemVector s = multiply(ctx.base(), h, std::span<const Elem>(x));
        CHECK(hamming_decision_corp(h, s, 1, oracle, ctx, p, rng));
        ElemVector sn{rng.below(2), rng.below(2), rng.below(2)};
        auto wh = hamming_min_coset_weight(ctx, h, sn);
        if (wh && *wh > 1) {
            ++negatives;
            false_answers += !hamming_decision_corp(h, sn, 1, oracle, ctx, p, rng);
        }
        ElemVector nz{1, 0, 0};
        CHECK_FALSE(hamming_decision_corp(h, nz, 0, oracle, ctx, p, rng));
    }
    REQUIRE(negatives > 0);
    CHECK(false_answers >= 0.9 * negatives);
}

TEST_CASE("RP wrapper is one-sided and succeeds on positives")
{
    auto ctx = make_field(2, 8);
    auto p = make_params(4, 2, 8);
    Rng rng(6);
    SrOracle oracle = bruteforce_oracle();
    int successes = 0;
    for (int trial = 0; trial < 50; ++trial) {
        FqMatrix h = sample_full_rank_matrix(3, 4, ctx.base(), rng);
        ElemVector x{0, 0, 0, 0};
        x[rng.below(4)] = 1;
        ElemVector s = multiply(ctx.base(), h, std::span<const Elem>(x));
        RpOutcome out = hamming_decision_rp(h, s, 1, oracle, ctx, p, rng);
        if (out.answer) {
            ++successes;
            CHECK(verify_hamming_witness(ctx, h, s, out.witness, 1));
        }
        // t >= n: any consistent system is accepted.
        CHECK(hamming_decision_rp(h, s, 4, oracle, ctx, p, rng).answer);
        // s = 0 is witnessed by x = 0.
        ElemVector zero{0, 0, 0};
        RpOutcome z = hamming_decision_rp(h, zero, 0, oracle, ctx, p, rng);
        CHECK(z.answer);
        CHECK(z.witness == ElemVector(4, 0));
        // A negative instance is never accepted.
        ElemVector sn{rng.below(2), rng.below(2), rng.below(2)};
        auto wh = hamming_min_coset_weight(ctx, h, sn);
        if (wh && *wh > 1) CHECK_FALSE(hamming_decision_rp(h, sn, 1, oracle, ctx, p, rng).answer);
    }
    CHECK(successes >= 25);
}

TEST_CASE("noisy oracle and amplification")
{
    auto ctx = make_field(2, 8);
    auto p = make_params(4, 2, 8);
    Rng rng(7);
    FqMatrix h = sample_full_rank_matrix(3, 4, ctx.base(), rng);
    ElemVector x{1, 0, 0, 0};
    ElemVector s = multiply(ctx.base(), h, std::span<const Elem>(x));
    LiftedInstance l = lift_instance(h, ctx, rng);
    SrOracle noisy = noisy_oracle(bruteforce_oracle(), 0.5, 1);
    SrOracle amplified = noisy_oracle(bruteforce_oracle(), 0.5, 8);
    int raw = 0, amp = 0;
    for (int i = 0; i < 400; ++i) {
        raw += noisy(ctx, p, l.h, s, 1, rng);
        amp += amplified(ctx, p, l.h, s, 1, rng);
    }
    CHECK(raw > 140);
    CHECK(raw < 260);
    CHECK(amp > 390);
    ElemVector sn{1, 1, 1};
    if (!sr_decision_oracle_bruteforce(ctx, p, l.h, sn, 0)) CHECK_FALSE(amplified(ctx, p, l.h, sn, 0, rng));
    CHECK_THROWS_AS(noisy_oracle(bruteforce_oracle(), 1.5), Error);
    CHECK_THROWS_AS(noisy_oracle(bruteforce_oracle(), 0.1, 0), Error);
}

TEST_CASE("demo report is deterministic across thread counts")
{
    ReductionDemoConfig cfg;
    cfg.trials = 20;
    cfg.seed = 3;
    ReductionDemoReport a = run_reduction_demo(cfg);
    cfg.threads = 3;
    ReductionDemoReport b = run_reduction_demo(cfg);
    CHECK(a.rp_true == b.rp_true);
    CHECK(a.weight_preserved == b.weight_preserved);
    CHECK(a.rp_unverified_true == 0);
    CHECK(a.corp_true_on_positive == 20);
}
