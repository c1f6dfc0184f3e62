// Experiment runner: single runs, hyperparameter sweeps, sign-grid maps
// and step-size validity checks over the built-in benchmark problems.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wmvi/experiment.hpp"

namespace {

struct CliOptions {
  std::string problem = "lower-bound";
  std::string algorithm = "ogda-plus";
  wmvi::ExperimentConfig config;
  std::vector<double> u0;
  std::vector<std::string> sweep_specs;  // field=v1,v2,...
  std::string out_dir = ".";
};

void add_problem_options(CLI::App* cmd, CliOptions& opt) {
  cmd->add_option("--problem", opt.problem, "benchmark id")
      ->check(CLI::IsMember(wmvi::benchmark_ids()))
      ->capture_default_str();
  cmd->add_option("--xi", opt.config.params.xi, "lower-bound rotation strength");
  cmd->add_option("--zeta", opt.config.params.zeta, "lower-bound contraction (negative: expansion)");
  cmd->add_option("--param-a", opt.config.params.polar_a, "polar-game parameter a");
  cmd->add_option("--mu", opt.config.params.mu, "monotone-quadratic curvature");
  cmd->add_option("--dim", opt.config.params.dim, "monotone-quadratic dimension");
}

void add_solver_options(CLI::App* cmd, CliOptions& opt) {
  cmd->add_option("--algorithm", opt.algorithm, "solver")
      ->check(CLI::IsMember({"ogda-plus", "eg-plus", "adaptive-eg-plus", "stoch-ogda-plus"}))
      ->capture_default_str();
  cmd->add_option("--a,--a0", opt.config.solver.a, "step size (initial step for adaptive)")
      ->capture_default_str();
  cmd->add_option("--gamma", opt.config.solver.gamma, "update ratio gamma")->capture_default_str();
  cmd->add_option("--tau", opt.config.solver.tau, "adaptive step safety factor")
      ->capture_default_str();
  cmd->add_option("--sigma", opt.config.solver.sigma, "oracle noise scale")->capture_default_str();
  cmd->add_option("--batch", opt.config.solver.batch, "batch size")->capture_default_str();
  cmd->add_option("--iters", opt.config.solver.iters, "iteration budget")->capture_default_str();
  cmd->add_option("--tol", opt.config.solver.tol, "convergence tolerance on ||F||")
      ->capture_default_str();
  cmd->add_option("--seed", opt.config.solver.seed, "rng seed")->capture_default_str();
  cmd->add_option("--u0", opt.u0, "initial point coordinates");
  cmd->add_option("--out", opt.out_dir, "output directory")
      ->envname("WMVI_OUT_DIR")
      ->capture_default_str();
  cmd->set_config("--config", "", "key=value config file; flags override");
}

std::ofstream open_out(const std::string& dir, const std::string& file) {
  std::filesystem::create_directories(dir);
  const auto path = std::filesystem::path(dir) / file;
  std::ofstream os(path, std::ios::binary);  // binary: LF on every platform
  if (!os) throw std::runtime_error("cannot open " + path.string());
  std::cout << "wrote " << path.string() << "\n";
  return os;
}

void finalize_config(CliOptions& opt) {
  opt.config.problem = opt.problem;
  opt.config.solver.algorithm = wmvi::algorithm_from_string(opt.algorithm);
  if (!opt.u0.empty())
    opt.config.u0 = Eigen::Map<const wmvi::Vec>(opt.u0.data(), opt.u0.size());
}

std::vector<std::pair<std::string, std::vector<double>>> parse_sweeps(
    const std::vector<std::string>& specs) {
  std::vector<std::pair<std::string, std::vector<double>>> out;
  for (const std::string& spec : specs) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("sweep spec must look like field=v1,v2,...: " + spec);
    std::vector<double> values;
    std::string rest = spec.substr(eq + 1);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      const auto comma = rest.find(',', pos);
      const std::string tok = rest.substr(pos, comma - pos);
      if (!tok.empty()) values.push_back(std::stod(tok));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    out.emplace_back(spec.substr(0, eq), std::move(values));
  }
  return out;
}

int cmd_run(CliOptions& opt) {
  finalize_config(opt);
  const wmvi::RunResult result = wmvi::run_experiment(opt.config);
  if (result.left_validity_region)
    std::cerr << "warning: iterates left the region on which the stored "
                 "weak Minty modulus is valid\n";
  {
    auto os = open_out(opt.out_dir, "trace.csv");
    wmvi::write_trace_csv(os, result.trace);
  }
  {
    auto os = open_out(opt.out_dir, "certificate.csv");
    wmvi::write_certificate_csv(os, result.certificate, result.trace);
  }
  if (!result.certificate.applicable)
    std::cout << "certificate not applicable: " << result.certificate.reason << "\n";
  std::cout << wmvi::summary_line(result) << "\n";
  return 0;
}

int cmd_sweep(CliOptions& opt) {
  finalize_config(opt);
  opt.config.sweep = parse_sweeps(opt.sweep_specs);
  const wmvi::SweepResult result = wmvi::run_sweep(opt.config);
  auto os = open_out(opt.out_dir, "sweep.csv");
  wmvi::write_sweep_csv(os, result);
  return 0;
}

struct SignmapOptions {
  CliOptions base;
  double x_lo = 0.0, x_hi = 1.0, y_lo = 0.0, y_hi = 1.0;
  int nx = 200, ny = 200;
};

int cmd_signmap(SignmapOptions& opt) {
  const wmvi::BenchmarkSpec spec = wmvi::make_benchmark(opt.base.problem, opt.base.config.params);
  const wmvi::SignGrid grid =
      wmvi::sign_grid(spec.problem, opt.x_lo, opt.x_hi, opt.y_lo, opt.y_hi, opt.nx, opt.ny);
  auto os = open_out(opt.base.out_dir, "signmap.csv");
  wmvi::write_sign_grid_csv(os, grid);
  return 0;
}

struct ValidateOptions {
  CliOptions base;
  std::optional<double> lambda;
};

int cmd_validate(ValidateOptions& opt) {
  const double a = opt.base.config.solver.a;
  const double gamma = opt.base.config.solver.gamma;
  const wmvi::BenchmarkSpec spec = wmvi::make_benchmark(opt.base.problem, opt.base.config.params);
  const wmvi::ConfigValidity v = wmvi::validate_weak_minty_config(spec.problem, a, gamma);
  std::printf("verdict=%s rho_margin=%.17g step_margin=%.17g\n",
              v.verdict == wmvi::ConfigVerdict::Pass ? "PASS" : "THEORY-GAP", v.rho_margin,
              v.step_margin);
  if (opt.lambda) {
    const double bound = wmvi::ogda_step_size_bound(gamma, *opt.lambda);
    std::printf("max_aL=%.17g (gamma=%g, lambda=%g)\n", bound, gamma, *opt.lambda);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"solvers and experiments for variational inequalities with weak Minty solutions"};
  app.require_subcommand(1);

  CliOptions run_opt;
  CLI::App* run = app.add_subcommand("run", "single solver run; writes trace and certificate CSVs");
  add_problem_options(run, run_opt);
  add_solver_options(run, run_opt);

  CliOptions sweep_opt;
  CLI::App* sweep = app.add_subcommand("sweep", "Cartesian hyperparameter sweep; writes a summary CSV");
  add_problem_options(sweep, sweep_opt);
  add_solver_options(sweep, sweep_opt);
  sweep->add_option("--sweep", sweep_opt.sweep_specs, "sweep spec field=v1,v2,... (repeatable)")
      ->required();

  SignmapOptions signmap_opt;
  CLI::App* signmap = app.add_subcommand("signmap", "grid of sign(<F(u), u-u*>) as CSV");
  add_problem_options(signmap, signmap_opt.base);
  signmap->add_option("--out", signmap_opt.base.out_dir, "output directory")
      ->envname("WMVI_OUT_DIR")
      ->capture_default_str();
  signmap->add_option("--x-lo", signmap_opt.x_lo)->capture_default_str();
  signmap->add_option("--x-hi", signmap_opt.x_hi)->capture_default_str();
  signmap->add_option("--y-lo", signmap_opt.y_lo)->capture_default_str();
  signmap->add_option("--y-hi", signmap_opt.y_hi)->capture_default_str();
  signmap->add_option("--nx", signmap_opt.nx)->capture_default_str();
  signmap->add_option("--ny", signmap_opt.ny)->capture_default_str();

  ValidateOptions validate_opt;
  CLI::App* validate =
      app.add_subcommand("validate", "check the step size conditions for a configuration");
  add_problem_options(validate, validate_opt.base);
  validate->add_option("--a", validate_opt.base.config.solver.a, "step size")->capture_default_str();
  validate->add_option("--gamma", validate_opt.base.config.solver.gamma, "update ratio")
      ->capture_default_str();
  validate->add_option("--lambda", validate_opt.lambda,
                       "also print the general step size bound at this lambda");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(run_opt);
    if (sweep->parsed()) return cmd_sweep(sweep_opt);
    if (signmap->parsed()) return cmd_signmap(signmap_opt);
    return cmd_validate(validate_opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
