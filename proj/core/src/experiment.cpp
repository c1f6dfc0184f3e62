#include "wmvi/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "wmvi/stochastic.hpp"

namespace wmvi {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void apply_sweep_value(SolverConfig& solver, const std::string& field, double value) {
  if (field == "a") solver.a = value;
  else if (field == "gamma") solver.gamma = value;
  else if (field == "tau") solver.tau = value;
  else if (field == "sigma") solver.sigma = value;
  else if (field == "batch") solver.batch = static_cast<int>(value);
  else if (field == "seed") solver.seed = static_cast<std::uint64_t>(value);
  else if (field == "iters") solver.iters = static_cast<int>(value);
  else throw std::invalid_argument("unknown sweep field: " + field);
}

}  // namespace

Vec default_initial_point(const std::string& problem_id, int dim) {
  Vec u0 = Vec::Ones(dim);
  if (problem_id == "ratio-game" || problem_id == "forsaken") u0 *= 0.5;
  return u0;
}

RunResult run_experiment(const BenchmarkSpec& spec, const SolverConfig& config,
                         const Vec& u0) {
  const OperatorProblem& op = spec.problem;
  if (u0.size() != op.dim)
    throw std::invalid_argument("run_experiment: initial point dimension mismatch");
  if (config.iters < 1) throw std::invalid_argument("run_experiment: iters must be >= 1");
  if (config.tol <= 0.0) throw std::invalid_argument("run_experiment: tol must be > 0");

  RunResult result;
  IterateTrace& trace = result.trace;
  result.final_point = u0;
  const double tol_sq = config.tol * config.tol;

  OgdaPlusState ogda;
  EgPlusState eg;
  AdaptiveEgState adaptive;
  StochasticOracle oracle;
  StochOgdaState stoch;
  switch (config.algorithm) {
    case Algorithm::OgdaPlus:
      ogda = make_ogda_plus(op, u0, config.a, config.gamma);
      break;
    case Algorithm::EgPlus:
      eg = make_eg_plus(u0, config.a, config.gamma);
      break;
    case Algorithm::AdaptiveEgPlus:
      adaptive = make_adaptive_eg(u0, config.a, config.tau, config.gamma);
      break;
    case Algorithm::StochOgdaPlus:
      oracle = StochasticOracle{op, config.sigma, config.seed, 0};
      stoch = make_stoch_ogda(oracle, u0, config.a, config.gamma, config.batch);
      break;
  }
  long calls = config.algorithm == Algorithm::OgdaPlus
                   ? 1
                   : (config.algorithm == Algorithm::StochOgdaPlus ? config.batch : 0);

  for (int k = 0; k < config.iters; ++k) {
    StepReport report;
    try {
      switch (config.algorithm) {
        case Algorithm::OgdaPlus: report = ogda_plus_step(ogda, op); break;
        case Algorithm::EgPlus: report = eg_plus_step(eg, op); break;
        case Algorithm::AdaptiveEgPlus: report = adaptive_eg_step(adaptive, op); break;
        case Algorithm::StochOgdaPlus: report = stoch_ogda_plus_step(stoch, oracle); break;
      }
    } catch (const NonFiniteFieldError&) {
      trace.status = RunStatus::Diverged;
      break;
    }
    calls += report.oracle_calls;
    trace.append(TraceRow{k, report.rated_point, report.base_point,
                          report.field_norm_sq, report.step_used, calls});
    result.final_point = report.rated_point;
    if (op.validity_region && !op.validity_region->contains(report.rated_point))
      result.left_validity_region = true;
    if (trace.best_norm_sq <= tol_sq) break;
    if (report.rated_point.norm() > config.divergence_radius) {
      trace.status = RunStatus::Diverged;
      break;
    }
  }
  trace.status = classify_run(trace, config.tol);

  if (op.solution && !trace.empty()) {
    result.certificate = evaluate_certificate(trace, op, config);
  } else {
    result.certificate.applicable = false;
    result.certificate.reason = "no known solution";
  }
  return result;
}

RunResult run_experiment(const ExperimentConfig& config) {
  const BenchmarkSpec spec = make_benchmark(config.problem, config.params);
  const Vec u0 =
      config.u0 ? *config.u0 : default_initial_point(config.problem, spec.problem.dim);
  return run_experiment(spec, config.solver, u0);
}

std::string summary_line(const RunResult& result) {
  const IterateTrace& trace = result.trace;
  std::string line = "status=" + to_string(trace.status);
  line += " best_norm_sq=" + format_real(trace.best_norm_sq);
  line += " best_index=" + std::to_string(trace.best_index);
  line += " iterations=" + std::to_string(static_cast<int>(trace.rows.size()));
  line += " oracle_calls=" +
          std::to_string(trace.rows.empty() ? 0 : trace.rows.back().cumulative_oracle_calls);
  line += " final_step=" + format_real(trace.rows.empty() ? 0.0 : trace.rows.back().step);
  return line;
}

SweepResult run_sweep(const ExperimentConfig& config) {
  if (config.sweep.empty()) throw std::invalid_argument("run_sweep: no sweep fields");
  for (const auto& [field, values] : config.sweep)
    if (values.empty()) throw std::invalid_argument("run_sweep: empty value list for " + field);

  SweepResult result;
  bool sweeps_seed = false;
  for (const auto& [field, values] : config.sweep) {
    result.fields.push_back(field);
    if (field == "seed") sweeps_seed = true;
  }

  const std::size_t nfields = config.sweep.size();
  std::size_t total = 1;
  for (const auto& [field, values] : config.sweep) total *= values.size();

  for (std::size_t index = 0; index < total; ++index) {
    SweepCell cell;
    cell.solver = config.solver;
    std::size_t rem = index;
    for (std::size_t f = nfields; f-- > 0;) {
      const auto& values = config.sweep[f].second;
      const double v = values[rem % values.size()];
      rem /= values.size();
      cell.values.insert(cell.values.begin(), v);
      apply_sweep_value(cell.solver, config.sweep[f].first, v);
    }
    if (!sweeps_seed)
      cell.solver.seed = splitmix64(config.solver.seed ^ splitmix64(index));

    ExperimentConfig run_config = config;
    run_config.solver = cell.solver;
    run_config.sweep.clear();
    const RunResult run = run_experiment(run_config);
    cell.status = run.trace.status;
    cell.best_norm_sq = run.trace.best_norm_sq;
    cell.best_index = run.trace.best_index;
    cell.iterations = static_cast<int>(run.trace.rows.size());
    cell.oracle_calls =
        run.trace.rows.empty() ? 0 : run.trace.rows.back().cumulative_oracle_calls;
    cell.final_step = run.trace.rows.empty() ? 0.0 : run.trace.rows.back().step;
    result.cells.push_back(std::move(cell));
  }

  std::sort(result.cells.begin(), result.cells.end(),
            [](const SweepCell& lhs, const SweepCell& rhs) {
              return lhs.values < rhs.values;
            });
  return result;
}

void write_sweep_csv(std::ostream& os, const SweepResult& sweep) {
  std::string line;
  for (const std::string& field : sweep.fields) line += field + ',';
  line += "status,best_norm_sq,best_index,iterations,oracle_calls,final_step\n";
  os << line;
  for (const SweepCell& cell : sweep.cells) {
    line.clear();
    for (double v : cell.values) line += format_real(v) + ',';
    line += to_string(cell.status);
    line += ',' + format_real(cell.best_norm_sq);
    line += ',' + std::to_string(cell.best_index);
    line += ',' + std::to_string(cell.iterations);
    line += ',' + std::to_string(cell.oracle_calls);
    line += ',' + format_real(cell.final_step);
    line += '\n';
    os << line;
  }
}

}  // namespace wmvi
