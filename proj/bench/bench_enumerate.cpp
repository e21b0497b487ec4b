#include <benchmark/benchmark.h>

#include "torsion/oracle.hpp"
#include "torsion/parallel.hpp"

using namespace torsion;

namespace {

oracle::Execution mode(const benchmark::State& state) {
  return state.range(1) == 0 ? oracle::Execution::Serial : oracle::Execution::Parallel;
}

void BM_LinearBruteForce(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::size_t found = 0;
  for (auto _ : state) {
    found = oracle::enumerate_torsion_pairs_bruteforce(n, 7, mode(state)).size();
    benchmark::DoNotOptimize(found);
  }
  state.counters["pairs"] = static_cast<double>(found);
  state.counters["threads"] = parallel::max_threads();
}

void BM_TubeTruncated(benchmark::State& state) {
  const int rank = static_cast<int>(state.range(0));
  std::size_t found = 0;
  for (auto _ : state) {
    found = oracle::bruteforce_tube_truncated(rank, 2 * rank + 2, mode(state)).size();
    benchmark::DoNotOptimize(found);
  }
  state.counters["pairs"] = static_cast<double>(found);
}

}  // namespace

BENCHMARK(BM_LinearBruteForce)
    ->ArgNames({"n", "parallel"})
    ->ArgsProduct({{5, 6, 7}, {0, 1}})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TubeTruncated)
    ->ArgNames({"rank", "parallel"})
    ->ArgsProduct({{2, 3}, {0, 1}})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
