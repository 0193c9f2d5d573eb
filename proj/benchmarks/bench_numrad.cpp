#include <benchmark/benchmark.h>

#include "numrad/ensemble.hpp"
#include "numrad/inequality.hpp"
#include "numrad/radius.hpp"
#include "numrad/spectral.hpp"
#include "numrad/suite.hpp"

using namespace numrad;

static void BM_HermitianEig(benchmark::State& state) {
  Rng rng(1);
  const auto h = real_part(sample_ginibre(static_cast<std::size_t>(state.range(0)), rng));
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eig(h));
}
BENCHMARK(BM_HermitianEig)->DenseRange(2, 8, 2)->Arg(16);

static void BM_NumericalRadius(benchmark::State& state) {
  Rng rng(2);
  const auto t = sample_ginibre(static_cast<std::size_t>(state.range(0)), rng);
  std::size_t evaluations = 0;
  for (auto _ : state) {
    const auto r = numerical_radius(t);
    evaluations = r.evaluations;
    benchmark::DoNotOptimize(r.value);
  }
  state.counters["evaluations"] = static_cast<double>(evaluations);
}
BENCHMARK(BM_NumericalRadius)->DenseRange(2, 8, 2);

// A 2x2 nilpotent matrix has a disk as numerical range: the flat profile is
// the hardest case for certification.
static void BM_NumericalRadiusDisk(benchmark::State& state) {
  const ComplexMatrix t{{0, 1}, {0, 0}};
  for (auto _ : state) benchmark::DoNotOptimize(numerical_radius(t).value);
}
BENCHMARK(BM_NumericalRadiusDisk);

static void BM_GeneralizedRadiusTrace(benchmark::State& state) {
  Rng rng(3);
  const auto t = sample_ginibre(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(generalized_numerical_radius(t, NormSpec::trace()).value);
}
BENCHMARK(BM_GeneralizedRadiusTrace)->DenseRange(2, 8, 3);

static void BM_PsdSumEigenvalues(benchmark::State& state) {
  Rng rng(4);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto p = hermitian_eig(sample_hermitian_psd(n, rng));
  const auto q = hermitian_eig(sample_hermitian_psd(n, rng));
  const PsdTerm terms[] = {{0.5, &p, clamp_psd(p.eigenvalues)}, {0.5, &q, clamp_psd(q.eigenvalues)}};
  for (auto _ : state) benchmark::DoNotOptimize(psd_sum_eigenvalues(terms));
}
BENCHMARK(BM_PsdSumEigenvalues)->DenseRange(2, 8, 3);

static void BM_SuiteTrial(benchmark::State& state) {
  SuiteConfig config;
  config.trials = 21;  // one pass over every (ensemble, dimension) pair
  config.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(config).violations);
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * config.trials));
}
BENCHMARK(BM_SuiteTrial)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
