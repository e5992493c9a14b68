#include <benchmark/benchmark.h>

#include "hypersparse/decomposition.hpp"
#include "hypersparse/directed_sparsify.hpp"
#include "hypersparse/expander_sparsify.hpp"
#include "hypersparse/generators.hpp"
#include "hypersparse/overlap.hpp"
#include "hypersparse/pipeline.hpp"
#include "hypersparse/rng.hpp"
#include "hypersparse/sparsest_cut.hpp"

using namespace hypersparse;

static void BM_Energy(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    auto h = random_uniform(n, 8 * n, 3, 1);
    std::vector<double> x(n);
    for (std::size_t v = 0; v < n; ++v) x[v] = uniform01(2, v);
    for (auto _ : state) benchmark::DoNotOptimize(energy(h, x));
}
BENCHMARK(BM_Energy)->Arg(64)->Arg(256)->Arg(1024);

static void BM_CutValue(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    auto h = random_uniform(n, 8 * n, 3, 1);
    std::vector<bool> s(n);
    for (std::size_t v = 0; v < n; ++v) s[v] = uniform01(3, v) < 0.5;
    for (auto _ : state) benchmark::DoNotOptimize(cut_value(h, s));
}
BENCHMARK(BM_CutValue)->Arg(64)->Arg(1024);

static void BM_ExpanderSparsify(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    auto h = random_uniform(n, 16 * n, 3, 1);
    ExpanderSparsifyConfig cfg;
    cfg.lambda_c = 1e-12;
    for (auto _ : state) benchmark::DoNotOptimize(expander_sparsify(h, cfg));
}
BENCHMARK(BM_ExpanderSparsify)->Arg(64)->Arg(512);

static void BM_MetricLp(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    auto h = random_uniform(n, 3 * n, 3, 1);
    for (auto _ : state) benchmark::DoNotOptimize(solve_metric_lp(h));
}
BENCHMARK(BM_MetricLp)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_Decomposition(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    auto h = random_uniform(n, 6 * n, 3, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(expander_decomposition(h));
}
BENCHMARK(BM_Decomposition)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_Pipeline(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    auto h = random_uniform(n, 8 * n, 3, 1);
    PipelineConfig cfg;
    cfg.lambda_c = 1.5e-10;
    for (auto _ : state) benchmark::DoNotOptimize(sparsify(h, cfg));
}
BENCHMARK(BM_Pipeline)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_OverlapPeel(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    auto d = random_directed(n, 4 * n, 3, 1);
    for (auto _ : state) benchmark::DoNotOptimize(overlap_peel(d));
}
BENCHMARK(BM_OverlapPeel)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

static void BM_DirectedSparsify(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    auto d = random_directed(n, 4 * n, 3, 1);
    for (auto _ : state) benchmark::DoNotOptimize(directed_sparsify(d));
}
BENCHMARK(BM_DirectedSparsify)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
