#include <benchmark/benchmark.h>

#include "nhrlc/dynamics.hpp"
#include "nhrlc/mequiv.hpp"
#include "nhrlc/metric.hpp"
#include "nhrlc/pseudofermion.hpp"
#include "nhrlc/spectral.hpp"

namespace {

using namespace nhrlc;

const CircuitParams kBroken = CircuitParams::from_alpha_omega0(0.7, 1.3);
const CircuitParams kUnbroken = CircuitParams::from_alpha_omega0(1.25, 0.75);

void BM_Eigensystem(benchmark::State& state) {
  const CircuitParams& p = state.range(0) == 0 ? kBroken : kUnbroken;
  for (auto _ : state) benchmark::DoNotOptimize(eigensystem(p));
}
BENCHMARK(BM_Eigensystem)->Arg(0)->Arg(1);

void BM_MetricAndSimilarHamiltonian(benchmark::State& state) {
  const CircuitParams& p = state.range(0) == 0 ? kBroken : kUnbroken;
  const CMat2 h = hamiltonian(p);
  for (auto _ : state) {
    const MetricPair pair = metric_pair(eigensystem(p));
    benchmark::DoNotOptimize(similar_hamiltonian(pair, h));
  }
}
BENCHMARK(BM_MetricAndSimilarHamiltonian)->Arg(0)->Arg(1);

void BM_SolveIntertwiners(benchmark::State& state) {
  const CMat2 h = hamiltonian(kBroken);
  const CMat2 hd = gain_hamiltonian(kBroken);
  for (auto _ : state) benchmark::DoNotOptimize(solve_intertwiners(h, hd));
}
BENCHMARK(BM_SolveIntertwiners);

void BM_PseudoFermionLadder(benchmark::State& state) {
  const BiorthogonalSystem sys = eigensystem(kBroken);
  for (auto _ : state) {
    const PseudoFermionPair pf = pf_identify(kBroken, Branch::kPlus);
    benchmark::DoNotOptimize(ladder_check(pf, sys));
  }
}
BENCHMARK(BM_PseudoFermionLadder);

void BM_Fermionize(benchmark::State& state) {
  const BiorthogonalSystem sys = eigensystem(kBroken);
  const MetricPair pair = positive_metric_pair(sys);
  const PseudoFermionPair pf = pf_identify(kBroken, Branch::kPlus);
  for (auto _ : state) benchmark::DoNotOptimize(fermionize(pf, pair, sys));
}
BENCHMARK(BM_Fermionize);

void BM_Expm(benchmark::State& state) {
  const CMat2 m = -kI * hamiltonian(kBroken);
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(expm(m, t));
    t += 1e-3;
  }
}
BENCHMARK(BM_Expm);

// Trajectory over [0, 10] with the grid spacing 10 / range(0).
template <Method kMethod>
void BM_Evolve(benchmark::State& state) {
  const InitialData init{1.0, 0.2, 1.0};
  const std::vector<double> times = uniform_grid(10.0, 10.0 / static_cast<double>(state.range(0)));
  for (auto _ : state) {
    if constexpr (kMethod == Method::kClosedForm) benchmark::DoNotOptimize(evolve_closed_form(kBroken, init, times));
    if constexpr (kMethod == Method::kSpectral) benchmark::DoNotOptimize(evolve_spectral(kBroken, init, times));
    if constexpr (kMethod == Method::kExpm) benchmark::DoNotOptimize(evolve_expm(kBroken, init, times));
    if constexpr (kMethod == Method::kIntegrated)
      benchmark::DoNotOptimize(evolve_integrated(kBroken, init, times, 1e-3));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(times.size()));
}
BENCHMARK(BM_Evolve<Method::kClosedForm>)->Arg(100)->Arg(1000);
BENCHMARK(BM_Evolve<Method::kSpectral>)->Arg(100)->Arg(1000);
BENCHMARK(BM_Evolve<Method::kExpm>)->Arg(100)->Arg(1000);
BENCHMARK(BM_Evolve<Method::kIntegrated>)->Arg(100)->Arg(1000);

void BM_CheckLemma(benchmark::State& state) {
  const LiouvilleSystem sys = liouville(circu_form(2.0, 0.3, 2.0));
  CMat4 s = CMat4::identity();
  s(0, 1) = 0.5;
  s(2, 3) = Complex(0.0, 0.25);
  s(3, 0) = -0.75;
  for (auto _ : state) benchmark::DoNotOptimize(check_lemma(sys, s));
}
BENCHMARK(BM_CheckLemma);

}  // namespace

BENCHMARK_MAIN();
