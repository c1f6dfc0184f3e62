#include <benchmark/benchmark.h>

#include "wmvi/diagnostics.hpp"
#include "wmvi/experiment.hpp"
#include "wmvi/stochastic.hpp"

namespace {

using namespace wmvi;

Vec start(double x, double y) {
  Vec u(2);
  u << x, y;
  return u;
}

void BM_OgdaPlusStep(benchmark::State& state) {
  const BenchmarkSpec spec = ratio_game_problem();
  OgdaPlusState s = make_ogda_plus(spec.problem, start(0.5, 0.5), 0.33, 0.5);
  for (auto _ : state) {
    StepReport report = ogda_plus_step(s, spec.problem);
    benchmark::DoNotOptimize(report.field_norm_sq);
  }
}
BENCHMARK(BM_OgdaPlusStep);

void BM_EgPlusStep(benchmark::State& state) {
  const BenchmarkSpec spec = ratio_game_problem();
  EgPlusState s = make_eg_plus(start(0.5, 0.5), 0.33, 0.5);
  for (auto _ : state) {
    StepReport report = eg_plus_step(s, spec.problem);
    benchmark::DoNotOptimize(report.field_norm_sq);
  }
}
BENCHMARK(BM_EgPlusStep);

void BM_AdaptiveEgStep(benchmark::State& state) {
  const BenchmarkSpec spec = forsaken_problem();
  AdaptiveEgState s = make_adaptive_eg(start(0.5, 0.5), 0.5, 0.99, 0.5);
  for (auto _ : state) {
    StepReport report = adaptive_eg_step(s, spec.problem);
    benchmark::DoNotOptimize(report.field_norm_sq);
  }
}
BENCHMARK(BM_AdaptiveEgStep);

void BM_StochOgdaStep(benchmark::State& state) {
  const BenchmarkSpec spec = monotone_quadratic_problem(1.0, 2);
  StochasticOracle oracle{spec.problem, 0.1, 7, 0};
  const int batch = static_cast<int>(state.range(0));
  StochOgdaState s = make_stoch_ogda(oracle, start(1.0, 1.0), 0.3, 0.5, batch);
  for (auto _ : state) {
    StepReport report = stoch_ogda_plus_step(s, oracle);
    benchmark::DoNotOptimize(report.field_norm_sq);
  }
}
BENCHMARK(BM_StochOgdaStep)->Arg(1)->Arg(10)->Arg(100);

void BM_SignGrid(benchmark::State& state) {
  const BenchmarkSpec spec = ratio_game_problem();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    SignGrid grid = sign_grid(spec.problem, 0.0, 1.0, 0.0, 1.0, n, n);
    benchmark::DoNotOptimize(grid.values.data());
  }
}
BENCHMARK(BM_SignGrid)->Arg(50)->Arg(200);

void BM_FullRunRatioGame(benchmark::State& state) {
  const BenchmarkSpec spec = ratio_game_problem();
  SolverConfig config;
  config.algorithm = Algorithm::OgdaPlus;
  config.a = 0.33;
  config.iters = 10000;
  for (auto _ : state) {
    RunResult result = run_experiment(spec, config, start(0.5, 0.5));
    benchmark::DoNotOptimize(result.trace.best_norm_sq);
  }
}
BENCHMARK(BM_FullRunRatioGame);

}  // namespace

BENCHMARK_MAIN();
