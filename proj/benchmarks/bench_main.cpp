#include <benchmark/benchmark.h>

#include "sumrank/codes.hpp"
#include "sumrank/counting.hpp"
#include "sumrank/decoder.hpp"
#include "sumrank/distribution.hpp"
#include "sumrank/sampling.hpp"

using namespace sumrank;

static void BM_FieldMul(benchmark::State& state)
{
    const FieldContext ctx = make_field(2, static_cast<unsigned>(state.range(0)));
    const FiniteField& f = ctx.ext();
    Rng rng(1);
    Elem a = uniform_element(f, rng) | 1, b = uniform_element(f, rng) | 1;
    for (auto _ : state) {
        a = f.mul(a, b);
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(BM_FieldMul)->Arg(8)->Arg(16)->Arg(40);

static void BM_SphereSize(benchmark::State& state)
{
    const int ell = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sphere_size(10, ell, 2, 60 / ell, 40));
}
BENCHMARK(BM_SphereSize)->Arg(1)->Arg(6)->Arg(60);

static void BM_DrawDecomposition(benchmark::State& state)
{
    const SupportDistribution dist(2, 20, 9, 30, 2, 10);
    Rng rng(2);
    for (auto _ : state) benchmark::DoNotOptimize(draw_decomposition(dist, rng));
}
BENCHMARK(BM_DrawDecomposition);

static void BM_SampleUniformError(benchmark::State& state)
{
    const FieldContext ctx = make_field(2, 8);
    const SumRankParams p = make_params(16, 4, 8);
    const SphereTable table(2, p.eta, p.m, 4, p.ell);
    Rng rng(3);
    for (auto _ : state) benchmark::DoNotOptimize(sample_uniform_error(4, p, ctx, rng, &table));
}
BENCHMARK(BM_SampleUniformError);

static void BM_ErasureDecode(benchmark::State& state)
{
    const FieldContext ctx = make_field(2, 8);
    const SumRankParams p = make_params(16, 4, 8);
    Rng rng(4);
    const LinearCode code = random_code(8, p, ctx, rng);
    const BlockVector e = sample_uniform_error(3, p, ctx, rng);
    BlockVector r = random_codeword(code, rng);
    for (std::size_t i = 0; i < r.entries.size(); ++i) r.entries[i] = ctx.ext().add(r.entries[i], e.entries[i]);
    const SumRankSupport f = support_of(ctx, e, SupportKind::Row);
    for (auto _ : state) benchmark::DoNotOptimize(erasure_decode(ctx, p, code.H, r, f));
}
BENCHMARK(BM_ErasureDecode);
BENCHMARK_MAIN();
