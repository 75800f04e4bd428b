#include <benchmark/benchmark.h>

#include "steercorr/steercorr.hpp"

using namespace steercorr;

namespace {

DensityMatrix sample_state() {
  Rng rng(0);
  return bell_diagonal_from_c(sample_tetrahedron(rng));
}

}  // namespace

static void BM_BlochDecompose(benchmark::State& state) {
  const DensityMatrix rho = sample_state();
  for (auto _ : state) benchmark::DoNotOptimize(bloch_decompose(rho));
}
BENCHMARK(BM_BlochDecompose);

static void BM_CanonicalForm(benchmark::State& state) {
  Rng rng(1);
  const DensityMatrix rho = pure_state(random_pure_vector(rng));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(rho));
}
BENCHMARK(BM_CanonicalForm);

static void BM_Holevo(benchmark::State& state) {
  const DensityMatrix rho = sample_state();
  const QubitBasis basis = basis_from_direction(Vector3(0.3, -0.4, 0.8));
  for (auto _ : state) benchmark::DoNotOptimize(holevo(rho, basis));
}
BENCHMARK(BM_Holevo);

static void BM_RelationResiduals(benchmark::State& state) {
  const CorrelationVector c(0.6, -0.4, 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(relation_residuals(c));
}
BENCHMARK(BM_RelationResiduals);

static void BM_CjwrMaximize(benchmark::State& state) {
  const DensityMatrix rho = sample_state();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cjwr_maximize(rho, n).F);
}
BENCHMARK(BM_CjwrMaximize)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_C2Numeric(benchmark::State& state) {
  const DensityMatrix rho = sample_state();
  for (auto _ : state) benchmark::DoNotOptimize(c2_numeric(rho).value);
}
BENCHMARK(BM_C2Numeric)->Unit(benchmark::kMillisecond);

static void BM_C3Numeric(benchmark::State& state) {
  const DensityMatrix rho = sample_state();
  for (auto _ : state) benchmark::DoNotOptimize(c3_numeric(rho).value);
}
BENCHMARK(BM_C3Numeric)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
