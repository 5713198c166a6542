// Serial reference loops against their OpenMP counterparts.

#include <cmath>
#include <vector>

#include <benchmark/benchmark.h>

#include "reserve_lab/info.hpp"
#include "reserve_lab/kernels.hpp"

namespace {

using namespace reserve_lab;

constexpr std::size_t kTrials = 20000;

void BM_RevenueSerial(benchmark::State& state) {
  const auto d = Distribution::exponential(1.0);
  const auto s = PricingStrategy::guarded(std::exp(-1.0));
  const auto m = static_cast<std::size_t>(state.range(0));
  std::vector<double> out(kTrials);
  for (auto _ : state) {
    kernels::revenue_trials_serial(d, s, m, 7, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * kTrials));
}

void BM_RevenueParallel(benchmark::State& state) {
  const auto d = Distribution::exponential(1.0);
  const auto s = PricingStrategy::guarded(std::exp(-1.0));
  const auto m = static_cast<std::size_t>(state.range(0));
  std::vector<double> out(kTrials);
  for (auto _ : state) {
    kernels::revenue_trials_parallel(d, s, m, 7, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * kTrials));
}

void BM_ClassifySerial(benchmark::State& state) {
  const auto pair = info::make_lb_pair(info::PairKind::Regular, {0.05, 0.1, {}});
  std::vector<unsigned char> out(kTrials);
  for (auto _ : state) {
    kernels::classify_trials_serial(pair.d1, pair.d2, static_cast<std::size_t>(state.range(0)), 7, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * kTrials));
}

void BM_ClassifyParallel(benchmark::State& state) {
  const auto pair = info::make_lb_pair(info::PairKind::Regular, {0.05, 0.1, {}});
  std::vector<unsigned char> out(kTrials);
  for (auto _ : state) {
    kernels::classify_trials_parallel(pair.d1, pair.d2, static_cast<std::size_t>(state.range(0)), 7, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * kTrials));
}

}  // namespace

BENCHMARK(BM_RevenueSerial)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RevenueParallel)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassifySerial)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassifyParallel)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
