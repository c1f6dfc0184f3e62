#include "wmvi/diagnostics.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace wmvi {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kRelSlack = 1e-9;

void append_real(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out += buf;
}

}  // namespace

std::string to_string(RunStatus s) {
  switch (s) {
    case RunStatus::Converged: return "converged";
    case RunStatus::Diverged: return "diverged";
    case RunStatus::BudgetExhausted: return "budget_exhausted";
  }
  return "?";
}

std::string to_string(TheoremId t) {
  switch (t) {
    case TheoremId::OgdaWeakMinty: return "ogda_weak_minty";
    case TheoremId::OgdaMonotone: return "ogda_monotone";
    case TheoremId::AdaptiveEg: return "adaptive_eg";
  }
  return "?";
}

void IterateTrace::append(TraceRow row) {
  if (!rows.empty() && row.cumulative_oracle_calls <= rows.back().cumulative_oracle_calls)
    throw std::invalid_argument("IterateTrace: oracle calls must be strictly increasing");
  if (row.field_norm_sq < best_norm_sq) {
    best_norm_sq = row.field_norm_sq;
    best_index = row.k;
  }
  rows.push_back(std::move(row));
}

RateCertificate evaluate_certificate(const IterateTrace& trace,
                                     const OperatorProblem& op,
                                     const SolverConfig& config) {
  if (trace.empty()) throw std::invalid_argument("evaluate_certificate: empty trace");
  if (!op.solution) throw std::invalid_argument("evaluate_certificate: operator has no solution");
  const Vec& star = *op.solution;
  const std::size_t n = trace.rows.size();

  RateCertificate cert;
  auto not_applicable = [&cert](const std::string& why) {
    cert.applicable = false;
    cert.reason = why;
    return cert;
  };

  const Algorithm algo = config.algorithm;
  if (algo == Algorithm::EgPlus)
    return not_applicable("no rate certificate for fixed-step EG+");
  if (algo == Algorithm::StochOgdaPlus && config.sigma != 0.0)
    return not_applicable("no deterministic certificate for noisy runs");

  if (algo == Algorithm::OgdaPlus || algo == Algorithm::StochOgdaPlus) {
    if (!op.lipschitz) return not_applicable("missing lipschitz metadata");
    const double L = *op.lipschitz;
    const double a = config.a;
    const double gamma = config.gamma;
    const Vec u0 = trace.rows.front().u;
    const double v0 = ogda_lyapunov(u0, op.eval(u0), a, star);

    double coeff;  // bound_at_k[k] = coeff / k
    if (op.monotone) {
      cert.theorem = TheoremId::OgdaMonotone;
      const double eps = (2.0 - gamma) / (2.0 + gamma) - a * L;
      if (eps <= 0.0) return not_applicable("a*L >= (2-gamma)/(2+gamma)");
      coeff = 2.0 * v0 / (a * a * gamma * gamma * eps);
    } else {
      cert.theorem = TheoremId::OgdaWeakMinty;
      if (!op.weak_minty_rho) return not_applicable("missing weak_minty_rho metadata");
      const double rho = *op.weak_minty_rho;
      if (a <= rho) return not_applicable("a <= rho");
      if (rho >= 1.0 / L) return not_applicable("rho >= 1/L");
      if (a * L > (1.0 - gamma) / (1.0 + gamma))
        return not_applicable("a*L > (1-gamma)/(1+gamma)");
      coeff = v0 / (a * gamma * (a - rho));
    }

    cert.applicable = true;
    cert.reason = "preconditions hold";
    cert.bound_at_k.assign(n + 1, kInf);
    double best = kInf;
    for (std::size_t k = 1; k <= n; ++k) {
      best = std::min(best, trace.rows[k - 1].field_norm_sq);
      cert.bound_at_k[k] = coeff / static_cast<double>(k);
      if (!cert.violated_at && best > cert.bound_at_k[k] * (1.0 + kRelSlack))
        cert.violated_at = static_cast<int>(k);
    }
    return cert;
  }

  // adaptive EG+
  cert.theorem = TheoremId::AdaptiveEg;
  if (!op.lipschitz) return not_applicable("missing lipschitz metadata");
  if (!op.weak_minty_rho) return not_applicable("missing weak_minty_rho metadata");
  if (std::abs(config.gamma - 0.5) > 1e-12) return not_applicable("requires gamma = 1/2");
  const double L = *op.lipschitz;
  const double rho = *op.weak_minty_rho;
  const double a_fin = trace.rows.back().step;
  if (a_fin <= 2.0 * rho) return not_applicable("final step size <= 2*rho");

  // first index from which a_k / a_{k+1} <= 1/tau held at every step
  int k0 = 0;
  for (std::size_t k = 1; k < n; ++k) {
    if (trace.rows[k - 1].step / trace.rows[k].step > 1.0 / config.tau)
      k0 = static_cast<int>(k);
  }
  cert.k0 = k0;
  const double w0 = (trace.rows[k0].base - star).squaredNorm();
  const double coeff = L / (config.tau * (a_fin / 2.0 - rho)) * w0;

  cert.applicable = true;
  cert.reason = "post hoc: uses detected k0 and final step size";
  cert.bound_at_k.assign(n + 1, kInf);
  double best = kInf;
  for (std::size_t k = k0; k < n; ++k) {
    best = std::min(best, trace.rows[k].field_norm_sq);
    if (k == static_cast<std::size_t>(k0)) continue;
    cert.bound_at_k[k] = coeff / static_cast<double>(k - k0);
    if (!cert.violated_at && best > cert.bound_at_k[k] * (1.0 + kRelSlack))
      cert.violated_at = static_cast<int>(k);
  }
  return cert;
}

SignGrid sign_grid(const OperatorProblem& op, double x_lo, double x_hi,
                   double y_lo, double y_hi, int nx, int ny) {
  if (!op.solution) throw std::invalid_argument("sign_grid: operator has no solution");
  if (nx < 2 || ny < 2) throw std::invalid_argument("sign_grid: resolution must be >= 2");
  if (op.dim != 2) throw std::invalid_argument("sign_grid: operator must be 2-D");
  const Vec& star = *op.solution;

  SignGrid grid;
  grid.x_lo = x_lo;
  grid.x_hi = x_hi;
  grid.y_lo = y_lo;
  grid.y_hi = y_hi;
  grid.nx = nx;
  grid.ny = ny;
  grid.values.resize(nx, ny);
  Vec u(2);
  for (int i = 0; i < nx; ++i) {
    u[0] = x_lo + (x_hi - x_lo) * i / (nx - 1);
    for (int j = 0; j < ny; ++j) {
      u[1] = y_lo + (y_hi - y_lo) * j / (ny - 1);
      const double ip = op.eval(u).dot(u - star);
      grid.values(i, j) = std::abs(ip) < 1e-12 ? 0 : (ip > 0 ? 1 : -1);
    }
  }
  return grid;
}

double weak_minty_residual(const OperatorProblem& op, const Vec& u) {
  if (!op.solution || !op.weak_minty_rho)
    throw std::invalid_argument("weak_minty_residual: missing solution or rho metadata");
  const Vec g = op.eval(u);
  return g.dot(u - *op.solution) + (*op.weak_minty_rho / 2.0) * g.squaredNorm();
}

RunStatus classify_run(const IterateTrace& trace, double tol) {
  if (tol <= 0.0) throw std::invalid_argument("classify_run: tol must be > 0");
  if (trace.best_norm_sq <= tol * tol) return RunStatus::Converged;
  if (trace.status == RunStatus::Diverged) return RunStatus::Diverged;
  return RunStatus::BudgetExhausted;
}

void write_trace_csv(std::ostream& os, const IterateTrace& trace) {
  const int d = trace.rows.empty() ? 0 : static_cast<int>(trace.rows.front().u.size());
  std::string line = "k";
  for (int i = 0; i < d; ++i) line += ",u_" + std::to_string(i);
  line += ",field_norm_sq,step,oracle_calls\n";
  os << line;
  for (const TraceRow& row : trace.rows) {
    line = std::to_string(row.k);
    for (int i = 0; i < d; ++i) {
      line += ',';
      append_real(line, row.u[i]);
    }
    line += ',';
    append_real(line, row.field_norm_sq);
    line += ',';
    append_real(line, row.step);
    line += ',' + std::to_string(row.cumulative_oracle_calls) + '\n';
    os << line;
  }
}

void write_certificate_csv(std::ostream& os, const RateCertificate& cert,
                           const IterateTrace& trace) {
  os << "k,bound,best_norm_sq,ok\n";
  if (!cert.applicable) return;
  double best = kInf;
  for (std::size_t k = 1; k < cert.bound_at_k.size(); ++k) {
    if (k <= trace.rows.size()) best = std::min(best, trace.rows[k - 1].field_norm_sq);
    const double bound = cert.bound_at_k[k];
    if (!std::isfinite(bound)) continue;
    const bool ok = best <= bound * (1.0 + kRelSlack);
    std::string line = std::to_string(k);
    line += ',';
    append_real(line, bound);
    line += ',';
    append_real(line, best);
    line += ',';
    line += ok ? '1' : '0';
    line += '\n';
    os << line;
  }
}

void write_sign_grid_csv(std::ostream& os, const SignGrid& grid) {
  os << "x,y,sign\n";
  for (int i = 0; i < grid.nx; ++i) {
    const double x = grid.x_lo + (grid.x_hi - grid.x_lo) * i / (grid.nx - 1);
    for (int j = 0; j < grid.ny; ++j) {
      const double y = grid.y_lo + (grid.y_hi - grid.y_lo) * j / (grid.ny - 1);
      std::string line;
      append_real(line, x);
      line += ',';
      append_real(line, y);
      line += ',' + std::to_string(grid.values(i, j)) + '\n';
      os << line;
    }
  }
}

}  // namespace wmvi
