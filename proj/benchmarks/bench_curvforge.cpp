#include <benchmark/benchmark.h>

#include "curvforge/curvature.hpp"
#include "curvforge/osserman.hpp"
#include "curvforge/sampling.hpp"
#include "testkit.hpp"

namespace {

using namespace curvforge;

// Argument n selects a tensor on signature (1, n - 1).
CurvatureTensor lorentzian_tensor(std::int64_t n) {
  const auto dim = static_cast<std::size_t>(n);
  return testkit::random_act({dim, 1, dim - 1, 7, 2, 5});
}

void BM_JacobiOperator(benchmark::State& state) {
  const CurvatureTensor r = lorentzian_tensor(state.range(0));
  SampleRng rng(1);
  const Vector x = rng.vector(r.space().dim());
  for (auto _ : state) benchmark::DoNotOptimize(jacobi_operator(r, x));
}
BENCHMARK(BM_JacobiOperator)->DenseRange(3, 6);

void BM_Reconstruct(benchmark::State& state) {
  const CurvatureTensor r = lorentzian_tensor(state.range(0));
  const JacobiFamily k = totalize(jacobi_family_of(r));
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct(k));
}
BENCHMARK(BM_Reconstruct)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_NullExtension(benchmark::State& state) {
  const CurvatureTensor r = lorentzian_tensor(state.range(0));
  const JacobiFamily k = jacobi_family_of(r);
  NullSampler nulls(r.space(), 3);
  const Vector n = nulls.next();
  for (auto _ : state) benchmark::DoNotOptimize(extend_to_null(k, n));
}
BENCHMARK(BM_NullExtension)->DenseRange(3, 6);

void BM_AxiomSuite(benchmark::State& state) {
  const JacobiFamily k = jacobi_family_of(lorentzian_tensor(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_axiom_suite(k, 32, 0));
}
BENCHMARK(BM_AxiomSuite)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_CharPoly(benchmark::State& state) {
  const CurvatureTensor r = lorentzian_tensor(state.range(0));
  SampleRng rng(2);
  const Vector x = rng.nonnull_vector(r.space());
  for (auto _ : state) benchmark::DoNotOptimize(normalized_char_poly(r, x));
}
BENCHMARK(BM_CharPoly)->DenseRange(3, 6);

void BM_IsOsserman(benchmark::State& state) {
  const CurvatureTensor r =
      build_clifford(testkit::random_clifford_spec(static_cast<std::size_t>(state.range(0)), false, 4));
  for (auto _ : state) benchmark::DoNotOptimize(is_osserman(r, 32, 0));
}
BENCHMARK(BM_IsOsserman)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_EigenSubstituteEvaluate(benchmark::State& state) {
  const CurvatureTensor r = build_clifford(testkit::random_clifford_spec(4, false, 5));
  const SpectralDecomposition d = spectral_decomposition(r, Vector::basis(4, 0));
  std::vector<Rational> mu;
  for (std::size_t i = 0; i < d.k(); ++i) mu.push_back(Rational(static_cast<long>(i) + 2));
  const JacobiFamily k = eigen_substitute(r, mu);
  SampleRng rng(6);
  const Vector x = rng.nonnull_vector(r.space());
  for (auto _ : state) benchmark::DoNotOptimize(k(x));
}
BENCHMARK(BM_EigenSubstituteEvaluate);

}  // namespace

BENCHMARK_MAIN();
