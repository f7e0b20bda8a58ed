#include <benchmark/benchmark.h>

#include <vector>

#include "hermsq/asymptotics.hpp"
#include "hermsq/closed_forms.hpp"
#include "hermsq/combinatorics.hpp"
#include "hermsq/determinant.hpp"
#include "hermsq/moments.hpp"
#include "hermsq/pk.hpp"

using namespace hermsq;

static void BM_OracleQuad(benchmark::State& state) {
    const std::vector<int> idx(4, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle_h(idx));
    }
}
BENCHMARK(BM_OracleQuad)->Arg(8)->Arg(12)->Arg(16);

static void BM_RecurrenceWarm(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const QuadIndex q{n, n, n, n};
    recurrence_h4(q);  // fill the memo once
    for (auto _ : state) {
        benchmark::DoNotOptimize(recurrence_h4(q));
    }
}
BENCHMARK(BM_RecurrenceWarm)->Arg(8)->Arg(14);

static void BM_PkInterpolate(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(pk_interpolate(k));
    }
}
BENCHMARK(BM_PkInterpolate)->Arg(2)->Arg(4)->Arg(6);

static void BM_DnPermutations(benchmark::State& state) {
    const DetSpec spec{static_cast<int>(state.range(0)), 4};
    for (auto _ : state) {
        benchmark::DoNotOptimize(dn_by_permutations(spec));
    }
}
BENCHMARK(BM_DnPermutations)->Arg(4)->Arg(12);

static void BM_DnPolynomial(benchmark::State& state) {
    const DetSpec spec{static_cast<int>(state.range(0)), 4};
    for (auto _ : state) {
        benchmark::DoNotOptimize(dn_by_polynomial(spec));
    }
}
BENCHMARK(BM_DnPolynomial)->Arg(4)->Arg(12);

static void BM_LogMagnitude(benchmark::State& state) {
    const Rat v = double_factorial(2 * state.range(0) - 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(log_magnitude(v));
    }
}
BENCHMARK(BM_LogMagnitude)->Arg(100)->Arg(500);

static void BM_GfSeries(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(gf_rhs(4, order));
    }
}
BENCHMARK(BM_GfSeries)->Arg(8)->Arg(12);

BENCHMARK_MAIN();
