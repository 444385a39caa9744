#include "pslab/admissibility.hpp"
#include "pslab/exponent_pair.hpp"

#include <benchmark/benchmark.h>

using namespace pslab;

static void BM_AdmissibleRange(benchmark::State& state) {
    const ExponentPair pair = tty_pair();
    for (auto _ : state) {
        RangeReport r = admissible_range(pair);
        benchmark::DoNotOptimize(r.gamma_min);
    }
}
BENCHMARK(BM_AdmissibleRange);

static void BM_WordSearch(benchmark::State& state) {
    const int len = static_cast<int>(state.range(0));
    for (auto _ : state) {
        SearchResult r = search_pairs(len);
        benchmark::DoNotOptimize(r.report.gamma_min);
    }
}
BENCHMARK(BM_WordSearch)->Arg(4)->Arg(6)->Arg(8);

static void BM_ApplyWord(benchmark::State& state) {
    for (auto _ : state) {
        ExponentPair p = apply_word("BAABABAA");
        benchmark::DoNotOptimize(p.kappa);
    }
}
BENCHMARK(BM_ApplyWord);
