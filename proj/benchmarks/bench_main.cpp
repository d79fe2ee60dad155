#include <benchmark/benchmark.h>

#include <random>

#include "dunkl/corpus.hpp"
#include "dunkl/functionals.hpp"
#include "dunkl/harmonics.hpp"
#include "dunkl/polyalg.hpp"
#include "dunkl/sweeps.hpp"

using namespace dunkl;

namespace {

void BM_GroupGeneration(benchmark::State& state) {
  const auto rs = build_root_system(Family::B, static_cast<int>(state.range(0)), {Rational(1), Rational(1)});
  for (auto _ : state) benchmark::DoNotOptimize(generate_group(rs).order());
}
BENCHMARK(BM_GroupGeneration)->Arg(2)->Arg(3)->Arg(4);

void BM_DunklLaplacianSymbolic(benchmark::State& state) {
  const auto rs = build_root_system(Family::A, 3, {Rational(2, 3)});
  std::mt19937_64 rng(1);
  const auto p = random_polynomial(4, static_cast<int>(state.range(0)), rng, 10);
  for (auto _ : state) benchmark::DoNotOptimize(dunkl_laplacian_sym(rs, p));
}
BENCHMARK(BM_DunklLaplacianSymbolic)->Arg(3)->Arg(6);

void BM_HHarmonicKernel(benchmark::State& state) {
  const auto rs = build_root_system(Family::A, 3, {Rational(1, 2)});
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hharmonic_kernel(rs, n).size());
}
BENCHMARK(BM_HHarmonicKernel)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_DunklLaplacianNumeric(benchmark::State& state) {
  const auto rs = build_root_system(Family::B, 3, {Rational(1, 2), Rational(1)});
  const ShiftedGaussian g({0.2, -0.1, 0.4}, 0.9);
  const std::vector<double> x{0.7, -0.3, 1.1};
  for (auto _ : state) benchmark::DoNotOptimize(dunkl_laplacian_num(rs, g, x));
}
BENCHMARK(BM_DunklLaplacianNumeric);

void BM_SphereRule(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sphere_rule(N, 16).size());
}
BENCHMARK(BM_SphereRule)->DenseRange(2, 5)->Unit(benchmark::kMicrosecond);

void BM_HardyQuotient(benchmark::State& state) {
  const auto rs = build_root_system(Family::A, 2, {Rational(1, 2)});
  const auto d = distance_data({DomainKind::ExteriorBall, 3, 1.0, 0}, rs);
  const auto corpus = domain_corpus(rs, d, 1, 11);
  const auto rule = sphere_rule_for(rs, static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(hardy_quotient_p(rs, *corpus[0].f, 2.0, d, corpus[0].grid, rule).value);
}
BENCHMARK(BM_HardyQuotient)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_SharpnessSweep(benchmark::State& state) {
  const auto rs = build_root_system(Family::A, 1, {Rational(0)}, 5);
  const auto f = make_family(FamilyKind::Rellich, rs);
  for (auto _ : state) benchmark::DoNotOptimize(sharpness_sweep(f, rs, default_epsilons()).extrapolated);
}
BENCHMARK(BM_SharpnessSweep)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
