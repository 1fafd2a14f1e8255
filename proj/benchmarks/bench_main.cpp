#include <benchmark/benchmark.h>

#include <vector>

#include "bellforge/bell.hpp"
#include "bellforge/bernoulli.hpp"
#include "bellforge/series.hpp"
#include "bellforge/stirling.hpp"

using namespace bellforge;

namespace {

std::vector<Rational> sample_args(std::size_t r) {
  std::vector<Rational> x;
  for (std::size_t j = 1; j <= r; ++j) x.emplace_back(BigInt(static_cast<long>(2 * j + 1)), BigInt(static_cast<long>(j + 3)));
  return x;
}

void BM_BellRecurrence(benchmark::State& state) {
  const auto x = sample_args(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bell<Rational>(x));
}
BENCHMARK(BM_BellRecurrence)->DenseRange(4, 16, 4);

void BM_BellPartitionSum(benchmark::State& state) {
  const auto x = sample_args(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bell_partition_sum<Rational>(x));
}
BENCHMARK(BM_BellPartitionSum)->DenseRange(4, 16, 4);

void BM_StirlingOracle(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(stirling_row_oracle(static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_StirlingOracle)->Arg(10)->Arg(40);

void BM_StirlingViaBell(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(stirling_row_via_bell(static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_StirlingViaBell)->Arg(10)->Arg(40);

void BM_StirlingShen(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(shen_recurrence_row(static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_StirlingShen)->Arg(10)->Arg(40);

void BM_BernoulliTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bernoulli(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_BernoulliTable)->Arg(20)->Arg(100);

void BM_SeriesExp(benchmark::State& state) {
  const auto N = static_cast<std::size_t>(state.range(0));
  const auto f = series::log_one_minus(N);
  for (auto _ : state) benchmark::DoNotOptimize(series::exp(f, N));
}
BENCHMARK(BM_SeriesExp)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
