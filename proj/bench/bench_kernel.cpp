// Pair kernels: textbook reference, bitmask serial, OpenMP parallel.
// Args are (rows, dimension).

#include <benchmark/benchmark.h>

#include <random>

#include "orthotrend/delta.hpp"
#include "orthotrend/permutation.hpp"

using namespace orthotrend;

namespace {

Dataset make_data(std::size_t rows, int dim) {
  std::mt19937_64 rng(rows * 31 + static_cast<std::size_t>(dim));
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<std::vector<double>> cols(static_cast<std::size_t>(dim), std::vector<double>(rows));
  for (auto& c : cols) {
    for (auto& v : c) v = u(rng);
  }
  return Dataset::from_columns(cols);
}

template <PairTally (*Kernel)(const Dataset&)>
void run_kernel(benchmark::State& state) {
  const auto rows = static_cast<std::size_t>(state.range(0));
  const auto data = make_data(rows, static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(data));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(rows * (rows - 1) / 2));
}

PairTally parallel_default(const Dataset& d) { return tally_pairs_parallel(d); }

void pair_args(benchmark::internal::Benchmark* b) {
  for (int rows : {64, 512, 2048, 8192}) {
    for (int dim : {3, 8}) b->Args({rows, dim});
  }
}

void BM_PermutationNull(benchmark::State& state) {
  const auto data = make_data(12, 3);
  for (auto _ : state) benchmark::DoNotOptimize(permutation_null_all(data, 999, 1));
}

}  // namespace

BENCHMARK(run_kernel<tally_pairs_reference>)->Name("reference")->Apply(pair_args);
BENCHMARK(run_kernel<tally_pairs_serial>)->Name("serial")->Apply(pair_args);
BENCHMARK(run_kernel<parallel_default>)->Name("parallel")->Apply(pair_args)->UseRealTime();
BENCHMARK(BM_PermutationNull)->Name("permutation_999")->UseRealTime();

BENCHMARK_MAIN();
