#include "pslab/exponent_pair.hpp"
#include "pslab/spacing.hpp"
#include "pslab/trilinear.hpp"
#include "pslab/vaaler.hpp"

#include <benchmark/benchmark.h>

using namespace pslab;

static void BM_TrilinearSum(benchmark::State& state) {
    const auto B = state.range(0);
    TrilinearSpec s = make_random_spec(1000.0, B, B, B, 0.5, 1.0, 0.75, 42);
    for (auto _ : state) {
        benchmark::DoNotOptimize(trilinear_sum(s));
    }
    state.SetItemsProcessed(state.iterations() * B * B * B);
}
BENCHMARK(BM_TrilinearSum)->Arg(8)->Arg(16)->Arg(32);

static void BM_SpacingMerge(benchmark::State& state) {
    SpacingParams p{state.range(0), state.range(0), 1.0, -1.0, 0.01};
    for (auto _ : state) {
        benchmark::DoNotOptimize(spacing_count(p));
    }
}
BENCHMARK(BM_SpacingMerge)->Arg(16)->Arg(32)->Arg(64);

static void BM_SpacingNaive(benchmark::State& state) {
    SpacingParams p{state.range(0), state.range(0), 1.0, -1.0, 0.01};
    for (auto _ : state) {
        benchmark::DoNotOptimize(spacing_count_naive(p));
    }
}
BENCHMARK(BM_SpacingNaive)->Arg(16)->Arg(32);

static void BM_VaalerVerify(benchmark::State& state) {
    const int H = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_vaaler(H, 10000).max_violation);
    }
}
BENCHMARK(BM_VaalerVerify)->Arg(16)->Arg(64);
