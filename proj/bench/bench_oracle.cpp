// Serial reference kernels against their OpenMP counterparts.
#include "ccseries/class_algebra.hpp"
#include "ccseries/double_coset.hpp"
#include "ccseries/oracle.hpp"

#include <benchmark/benchmark.h>

using namespace ccseries;

static void BM_ClassTableSerial(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(class_convolution_table_serial(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ClassTableSerial)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);

static void BM_ClassTableParallel(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(class_convolution_table(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ClassTableParallel)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);

static void BM_CosetTableSerial(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(double_coset_convolution_table_serial(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_CosetTableSerial)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

static void BM_CosetTableParallel(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(double_coset_convolution_table(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_CosetTableParallel)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

static void BM_HistogramSerial(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(coset_histogram_serial(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_HistogramSerial)->DenseRange(4, 5)->Unit(benchmark::kMillisecond);

static void BM_HistogramParallel(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(coset_histogram(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_HistogramParallel)->DenseRange(4, 5)->Unit(benchmark::kMillisecond);

static void BM_MainSeriesTable(benchmark::State& state)
{
    const int threads = static_cast<int>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(main_series_table(static_cast<int>(state.range(0)), threads));
}
BENCHMARK(BM_MainSeriesTable)->Args({10, 1})->Args({10, 0})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
