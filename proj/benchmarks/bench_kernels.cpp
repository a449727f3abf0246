// Microbenchmarks for the hot kernels: character tables, plethysm, boundary
// assembly and exact rank. Run via ./symres_benchmarks; each iteration uses
// a fresh engine so memo tables do not hide the cost being measured.

#include <benchmark/benchmark.h>

#include "symres/cecomplex.hpp"

using namespace symres;

namespace {

void BM_CharacterTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    CharacterEngine chars;
    long long checksum = 0;
    for (const Partition& lambda : partitions_of(n))
      for (const Partition& rho : partitions_of(n)) checksum += chars.mn_character(lambda, rho);
    benchmark::DoNotOptimize(checksum);
  }
}
BENCHMARK(BM_CharacterTable)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_HSeriesPlethysm(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Partition mu{d};  // one-row Schur plethysm at the series, degree d
  for (auto _ : state) {
    SymEngine sym;
    SymFn f = sym.plethysm(SymFn::generator(Basis::s, mu), sym.series(SeriesKind::h_series, d), d);
    benchmark::DoNotOptimize(f);
  }
}
BENCHMARK(BM_HSeriesPlethysm)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_MExpansion(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  Partition mu = partitions_of(size).front();
  for (auto _ : state) {
    CoefficientEngine coeffs;
    benchmark::DoNotOptimize(coeffs.m_expansion(mu));
  }
}
BENCHMARK(BM_MExpansion)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_BoundaryAssembly(benchmark::State& state) {
  GAlgebra g(3, 6, 3);
  for (auto _ : state) {
    CESlice slice(g, 3);
    benchmark::DoNotOptimize(slice.boundary(3).nnz());
  }
}
BENCHMARK(BM_BoundaryAssembly)->Unit(benchmark::kMillisecond);

void BM_SparseRank(benchmark::State& state) {
  GAlgebra g(3, 6, 3);
  CESlice slice(g, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(slice.boundary(3).rank());
  }
}
BENCHMARK(BM_SparseRank)->Unit(benchmark::kMillisecond);

void BM_VerifyInversion(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    CoefficientEngine coeffs;
    benchmark::DoNotOptimize(coeffs.verify_inversion(Partition{2, 1}, n).pass);
  }
}
BENCHMARK(BM_VerifyInversion)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_VerifyResolutionStretch(benchmark::State& state) {
  for (auto _ : state) {
    CEVerifier verifier;
    benchmark::DoNotOptimize(verifier.verify_resolution(Partition{2, 1}, 3, 6).pass);
  }
}
BENCHMARK(BM_VerifyResolutionStretch)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
