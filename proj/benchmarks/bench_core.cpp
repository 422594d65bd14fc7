#include <benchmark/benchmark.h>

#include "fockbench/fockbench.hpp"

using namespace fockbench;

namespace {

void BM_BuildOperators(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_operators(dim));
  }
}
BENCHMARK(BM_BuildOperators)->Arg(16)->Arg(64)->Arg(128);

void BM_Moments(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const OperatorSet ops = build_operators(dim);
  const PureState psi = coherent_state(1.0, dim);
  for (auto _ : state) {
    benchmark::DoNotOptimize(moments(psi, ops));
  }
}
BENCHMARK(BM_Moments)->Arg(32)->Arg(64);

void BM_MasterRhs(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const OperatorSet ops = build_operators(dim);
  const QBMParams qbm(1e-3, 100.0);
  const DensityMatrix rho = DensityMatrix::from_pure(coherent_state(1.0, dim));
  for (auto _ : state) {
    benchmark::DoNotOptimize(master_rhs(rho, ops, qbm));
  }
}
BENCHMARK(BM_MasterRhs)->Arg(16)->Arg(40);

void BM_IntegratePeriod(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const OperatorSet ops = build_operators(dim);
  const QBMParams qbm(1e-3, 100.0);
  const DensityMatrix rho0 = DensityMatrix::from_pure(coherent_state(1.0, dim));
  const TimeGrid grid = TimeGrid::one_period(ops.params, 17);
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate(rho0, ops, qbm, grid));
  }
}
BENCHMARK(BM_IntegratePeriod)->Arg(16)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_Certify(benchmark::State& state) {
  const int dim = 48;
  const OperatorSet ops = build_operators(dim);
  const PureState psi = coherent_state(1.0, dim);
  const TimeGrid grid = TimeGrid::one_period(ops.params, 1024);
  for (auto _ : state) {
    benchmark::DoNotOptimize(certify(psi, ops, grid));
  }
}
BENCHMARK(BM_Certify);

void BM_MinimizeDeltaH(benchmark::State& state) {
  const OperatorSet ops = build_operators(16);
  OptimizerConfig cfg;
  cfg.restarts = 1;
  cfg.seed = 3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(minimize_delta_H(ops, cfg));
  }
}
BENCHMARK(BM_MinimizeDeltaH)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
