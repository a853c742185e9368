#include <benchmark/benchmark.h>

#include <random>

#include "attenuant/attenuator.hpp"
#include "attenuant/beamsplitter.hpp"
#include "attenuant/linalg.hpp"
#include "attenuant/majorization.hpp"
#include "attenuant/schemes.hpp"

using namespace attenuant;

namespace {

CMat random_hermitian(std::size_t n) {
  std::mt19937_64 rng(n);
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMat a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = gauss(rng);
    for (std::size_t j = i + 1; j < n; ++j) {
      const cplx v(gauss(rng), gauss(rng));
      a(i, j) = v;
      a(j, i) = std::conj(v);
    }
  }
  return a;
}

void BM_bs_block(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bs_block(n, 0.42));
}
BENCHMARK(BM_bs_block)->Arg(8)->Arg(32)->Arg(108);

void BM_eig_hermitian(benchmark::State& state) {
  const auto a = random_hermitian(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eig_hermitian(a));
}
BENCHMARK(BM_eig_hermitian)->Arg(32)->Arg(120);

void BM_apply_thermal(benchmark::State& state) {
  const auto spec = thermal_attenuator(0.43, 0.6);
  const auto tau = thermal_state(0.6, 20);
  for (auto _ : state) benchmark::DoNotOptimize(apply(spec, tau));
}
BENCHMARK(BM_apply_thermal);

void BM_bound_chain(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(bound_chain(n, 1.0 / (n + 0.5)));
}
BENCHMARK(BM_bound_chain)->Arg(20)->Arg(200);

void BM_scheme1_point(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(scheme1_icoh(0.3, 0.5));
}
BENCHMARK(BM_scheme1_point);

void BM_scheme2(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(scheme2_icoh(n));
}
BENCHMARK(BM_scheme2)->Arg(10)->Arg(30);

}  // namespace

BENCHMARK_MAIN();
