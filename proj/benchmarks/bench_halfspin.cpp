#include <benchmark/benchmark.h>

#include "halfspin/halfspin.hpp"

using namespace halfspin;

static void BM_FdEigensolve(benchmark::State& state) {
  const RadialGrid grid(12.0, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fd_eigensolve(HalfInteger::from_twice(1), grid, 3));
  }
}
BENCHMARK(BM_FdEigensolve)->Arg(1000)->Arg(2000)->Arg(4000)->Unit(benchmark::kMillisecond);

static void BM_OperatorBuild(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(OperatorSet::build(static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_OperatorBuild)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_JointSpectrum(benchmark::State& state) {
  const auto ops = OperatorSet::build(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(joint_spectrum(ops));
}
BENCHMARK(BM_JointSpectrum)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_QuadratureNorm(benchmark::State& state) {
  const auto series =
      recursion_coefficients(validate(static_cast<int>(state.range(0)), HalfInteger::from_twice(1)));
  for (auto _ : state) benchmark::DoNotOptimize(quadrature_norm(series));
}
BENCHMARK(BM_QuadratureNorm)->Arg(2)->Arg(10);

static void BM_ExactRecursion(benchmark::State& state) {
  const auto qn = validate(40, HalfInteger::from_twice(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(recursion_coefficients(qn));
}
BENCHMARK(BM_ExactRecursion)->Arg(1)->Arg(21);

static void BM_DensityProfile(benchmark::State& state) {
  const auto qn = validate(10, HalfInteger::from_twice(3));
  const auto grid = RadialGrid::reference();
  for (auto _ : state) benchmark::DoNotOptimize(density_profile(qn, Constants(), grid));
}
BENCHMARK(BM_DensityProfile)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
