// Serial reference vs OpenMP kernels: per-order Hankel determinants and grid sweeps.

#include "ctrans/families.hpp"
#include "ctrans/hankel.hpp"
#include "ctrans/series_expr.hpp"

#include <benchmark/benchmark.h>

using namespace ctrans;

namespace {

IntSequence image_terms(int count) {
    return IntSequence::from_series(expand("1/((1-2*x*c(x))*(1-3*x*c(x)))", 2 * count));
}

void BM_HankelSerial(benchmark::State& state) {
    int count = static_cast<int>(state.range(0));
    IntSequence a = image_terms(count);
    for (auto _ : state) benchmark::DoNotOptimize(hankel_transform_serial(a, count));
}

void BM_HankelParallel(benchmark::State& state) {
    int count = static_cast<int>(state.range(0));
    IntSequence a = image_terms(count);
    for (auto _ : state) benchmark::DoNotOptimize(hankel_transform(a, count));
}

void BM_SweepSerial(benchmark::State& state) {
    long half = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(sweep_linear_ratio(-half, half, kHankelPrefix, false));
}

void BM_SweepParallel(benchmark::State& state) {
    long half = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(sweep_linear_ratio(-half, half, kHankelPrefix, true));
}

}  // namespace

BENCHMARK(BM_HankelSerial)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HankelParallel)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepSerial)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
