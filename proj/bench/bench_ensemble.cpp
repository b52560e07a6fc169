#include <benchmark/benchmark.h>

#include <algorithm>

#include "bridgelab/distribution.hpp"
#include "bridgelab/ensemble.hpp"
#include "bridgelab/path.hpp"
#include "bridgelab/renewal.hpp"

namespace {

using namespace bridgelab;

const std::vector<double> kGrid = uniform_grid(21);

ReplicatePlan renewal_plan(std::size_t replicates) {
  return {replicates, kGrid.size(), 7, 0x5eed};
}

void renewal_kernel(RandomStream& s, std::size_t, std::span<double> row) {
  static const auto dist = DistributionSpec::exponential(1.0);
  const auto path = simulate_renewal(s, dist, 1e4);
  const auto eta = eta_u(path, 1e4, kGrid);
  std::copy(eta.values.begin(), eta.values.end(), row.begin());
}

void BM_RenewalSerial(benchmark::State& state) {
  const auto plan = renewal_plan(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_replicates_serial(plan, renewal_kernel));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_RenewalParallel(benchmark::State& state) {
  const auto plan = renewal_plan(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_replicates_parallel(plan, renewal_kernel));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_RenewalSerial)->Arg(200)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RenewalParallel)->Arg(200)->Arg(2000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
