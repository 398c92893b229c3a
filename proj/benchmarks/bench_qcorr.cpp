#include <benchmark/benchmark.h>

#include <random>

#include "qcorr/qcorr.hpp"

namespace {

using namespace qcorr;

XState sample_state() {
  std::mt19937_64 rng(17);
  return sample_x_state(rng);
}

void BM_HermitianEigenvalues4(benchmark::State& st) {
  const XState s = sample_state();
  for (auto _ : st) benchmark::DoNotOptimize(hermitian_eigenvalues(s.density().matrix()));
}
BENCHMARK(BM_HermitianEigenvalues4);

void BM_ObjectiveClosedForm(benchmark::State& st) {
  const XState s = sample_state();
  for (auto _ : st) benchmark::DoNotOptimize(objective_G(s, {0.7, 0.3}));
}
BENCHMARK(BM_ObjectiveClosedForm);

void BM_ObjectiveFromMatrices(benchmark::State& st) {
  const XState s = sample_state();
  for (auto _ : st) benchmark::DoNotOptimize(objective_from_matrices(s, Objective::G, {0.7, 0.3}));
}
BENCHMARK(BM_ObjectiveFromMatrices);

void BM_OneWayDeficit(benchmark::State& st) {
  const XState s = sample_state();
  for (auto _ : st) benchmark::DoNotOptimize(one_way_deficit(s));
}
BENCHMARK(BM_OneWayDeficit);

void BM_Analyze(benchmark::State& st) {
  const XState s = sample_state();
  for (auto _ : st) benchmark::DoNotOptimize(analyze(s));
}
BENCHMARK(BM_Analyze);

void BM_GridOracle(benchmark::State& st) {
  const XState s = sample_state();
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(grid_oracle(s, Objective::G, n, n));
}
BENCHMARK(BM_GridOracle)->Arg(101)->Arg(201)->Unit(benchmark::kMillisecond);

void BM_PhaseDampingBoth(benchmark::State& st) {
  const XState s = sample_state();
  const KrausChannel ch = phase_damping_kraus(0.3);
  for (auto _ : st) benchmark::DoNotOptimize(apply_channel_both(s.density(), ch));
}
BENCHMARK(BM_PhaseDampingBoth);

void BM_BasisSwitchRoot(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(basis_switch_root());
}
BENCHMARK(BM_BasisSwitchRoot);

}  // namespace

BENCHMARK_MAIN();
