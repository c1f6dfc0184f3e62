#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "wmvi/algorithms.hpp"
#include "wmvi/diagnostics.hpp"
#include "wmvi/problems.hpp"

namespace wmvi {

/// Full description of one experiment: which benchmark, which solver,
/// where to start, and (optionally) which hyperparameters to sweep.
struct ExperimentConfig {
  std::string problem = "lower-bound";
  BenchmarkParams params;
  SolverConfig solver;
  std::optional<Vec> u0;  // default per problem when unset
  // Cartesian sweep: (field name, values); fields are solver
  // hyperparameters ("a", "gamma", "tau", "sigma", "batch", "seed").
  std::vector<std::pair<std::string, std::vector<double>>> sweep;
};

/// Documented fixed starting points: lower-bound (1,1), ratio-game
/// (0.5,0.5), forsaken (0.5,0.5), polar-game (1,1),
/// monotone-quadratic all-ones.
Vec default_initial_point(const std::string& problem_id, int dim);

struct RunResult {
  IterateTrace trace;
  RateCertificate certificate;
  Vec final_point;
  bool left_validity_region = false;
};

/// Runs the configured solver until convergence (best ||F||^2 <= tol^2),
/// divergence (||u|| beyond the guard radius or a non-finite field
/// value), or budget exhaustion, recording one trace row per iteration.
RunResult run_experiment(const BenchmarkSpec& spec, const SolverConfig& config,
                         const Vec& u0);
RunResult run_experiment(const ExperimentConfig& config);

/// One-line human-readable outcome: status, best ||F||^2, iteration
/// count, oracle calls, final step size.
std::string summary_line(const RunResult& result);

struct SweepCell {
  std::vector<double> values;  // one per sweep field, in config order
  SolverConfig solver;
  RunStatus status = RunStatus::BudgetExhausted;
  double best_norm_sq = 0.0;
  int best_index = -1;
  int iterations = 0;
  long oracle_calls = 0;
  double final_step = 0.0;
};

struct SweepResult {
  std::vector<std::string> fields;
  std::vector<SweepCell> cells;  // sorted by the sweep values
};

/// Cartesian product over the sweep lists, one run per cell. Each cell
/// gets a seed derived deterministically from (base seed, cell index)
/// unless "seed" is itself a sweep field.
SweepResult run_sweep(const ExperimentConfig& config);

/// CSV: one column per sweep field, then
/// status,best_norm_sq,best_index,iterations,oracle_calls,final_step.
void write_sweep_csv(std::ostream& os, const SweepResult& sweep);

}  // namespace wmvi
