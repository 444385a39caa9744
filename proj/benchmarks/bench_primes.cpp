#include "pslab/psprimes.hpp"

#include <benchmark/benchmark.h>

using namespace pslab;

static void BM_FloorPow(benchmark::State& state) {
    std::uint64_t n = 999'999'937;
    for (auto _ : state) {
        BigInt r = floor_pow(n, 6, 5);
        benchmark::DoNotOptimize(r);
        if (++n == 1'000'000'937) n = 999'999'937;
    }
}
BENCHMARK(BM_FloorPow);

static void BM_IsPrime(benchmark::State& state) {
    std::uint64_t n = 2'305'843'009'213'693'951ull;
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_prime(n));
        n -= 2;
    }
}
BENCHMARK(BM_IsPrime);

static void BM_PiC(benchmark::State& state) {
    const RationalExponent c(6, 5);
    const std::uint64_t x = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        PrimeCountReport r = pi_c(x, c);
        benchmark::DoNotOptimize(r.count);
    }
}
BENCHMARK(BM_PiC)->Arg(10'000)->Arg(100'000);

static void BM_VonMangoldtSieve(benchmark::State& state) {
    const std::uint64_t x = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        auto lam = von_mangoldt_range(x / 2 + 1, x);
        benchmark::DoNotOptimize(lam.data());
    }
}
BENCHMARK(BM_VonMangoldtSieve)->Arg(100'000)->Arg(1'000'000);
