#include <benchmark/benchmark.h>

#include <numbers>
#include <random>

#include "aniso/kernels.hpp"

using namespace aniso;

namespace {

BranchScan sqrt2_scan(std::int64_t m_max) {
  // Tolerance below anything reachable, so the whole range is scanned.
  return {(std::numbers::sqrt2_v<long double> - 1.0L) / 2.0L, 0.25L, 2.0L * std::numbers::pi_v<long double>, 1,
          m_max, 1e-300};
}

Matrix random_matrix(int dim, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  Matrix m(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) m(r, c) = Complex(g(rng), g(rng));
  return m;
}

void BM_ScanParallel(benchmark::State& state) {
  const BranchScan scan = sqrt2_scan(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(scan_branches(scan));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ScanSerial(benchmark::State& state) {
  const BranchScan scan = sqrt2_scan(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(scan_branches_serial(scan));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_PairGateParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Matrix gate = random_matrix(4, 1);
  Matrix u = random_matrix(1 << n, 2);
  for (auto _ : state) {
    apply_pair_gate(u, gate, n, 1, n);
    benchmark::DoNotOptimize(u.data());
  }
}

void BM_PairGateSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Matrix gate = random_matrix(4, 1);
  Matrix u = random_matrix(1 << n, 2);
  for (auto _ : state) {
    apply_pair_gate_serial(u, gate, n, 1, n);
    benchmark::DoNotOptimize(u.data());
  }
}

}  // namespace

BENCHMARK(BM_ScanParallel)->Arg(1 << 16)->Arg(1 << 20)->Arg(1 << 23)->UseRealTime();
BENCHMARK(BM_ScanSerial)->Arg(1 << 16)->Arg(1 << 20)->Arg(1 << 23)->UseRealTime();
BENCHMARK(BM_PairGateParallel)->DenseRange(6, 9, 3)->UseRealTime();
BENCHMARK(BM_PairGateSerial)->DenseRange(6, 9, 3)->UseRealTime();

BENCHMARK_MAIN();
