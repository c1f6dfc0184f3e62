#include "wmvi/algorithms.hpp"

#include <cmath>
#include <sstream>

namespace wmvi {

namespace {

std::string format_point(const Vec& u) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < u.size(); ++i) os << (i ? ", " : "") << u[i];
  os << ")";
  return os.str();
}

Vec eval_checked(const OperatorProblem& op, const Vec& u) {
  Vec g = op.eval(u);
  if (!g.allFinite()) throw NonFiniteFieldError(u);
  return g;
}

}  // namespace

NonFiniteFieldError::NonFiniteFieldError(const Vec& at)
    : std::runtime_error("non-finite field value at " + format_point(at)), point(at) {}

Algorithm algorithm_from_string(const std::string& s) {
  if (s == "ogda-plus") return Algorithm::OgdaPlus;
  if (s == "eg-plus") return Algorithm::EgPlus;
  if (s == "adaptive-eg-plus") return Algorithm::AdaptiveEgPlus;
  if (s == "stoch-ogda-plus") return Algorithm::StochOgdaPlus;
  throw std::invalid_argument("unknown algorithm: " + s);
}

std::string to_string(Algorithm a) {
  switch (a) {
    case Algorithm::OgdaPlus: return "ogda-plus";
    case Algorithm::EgPlus: return "eg-plus";
    case Algorithm::AdaptiveEgPlus: return "adaptive-eg-plus";
    case Algorithm::StochOgdaPlus: return "stoch-ogda-plus";
  }
  return "?";
}

// ---------------------------------------------------------------------------

OgdaPlusState make_ogda_plus(const OperatorProblem& op, const Vec& u0, double a,
                             double gamma) {
  if (a <= 0.0) throw std::invalid_argument("ogda+: step size must be > 0");
  if (gamma <= 0.0 || gamma > 1.0) throw std::invalid_argument("ogda+: gamma must be in (0, 1]");
  if (u0.size() != op.dim) throw std::invalid_argument("ogda+: dimension mismatch");
  OgdaPlusState s;
  s.u = u0;
  s.g_prev = eval_checked(op, u0);
  s.a = a;
  s.gamma = gamma;
  return s;
}

StepReport ogda_plus_step(OgdaPlusState& state, const OperatorProblem& op) {
  const Vec g = eval_checked(op, state.u);
  StepReport report;
  report.rated_point = state.u;
  report.base_point = state.u;
  report.field_norm_sq = g.squaredNorm();
  report.step_used = state.a;
  report.oracle_calls = 1;

  state.u = state.u - state.a * ((1.0 + state.gamma) * g - state.g_prev);
  state.g_prev = g;
  state.k += 1;
  return report;
}

// ---------------------------------------------------------------------------

EgPlusState make_eg_plus(const Vec& u0, double a, double gamma) {
  if (a <= 0.0) throw std::invalid_argument("eg+: step size must be > 0");
  if (gamma <= 0.0 || gamma > 1.0) throw std::invalid_argument("eg+: gamma must be in (0, 1]");
  EgPlusState s;
  s.u_bar = u0;
  s.a = a;
  s.gamma = gamma;
  return s;
}

StepReport eg_plus_step(EgPlusState& state, const OperatorProblem& op) {
  const Vec g_bar = eval_checked(op, state.u_bar);
  const Vec u = state.u_bar - state.a * g_bar;
  const Vec g = eval_checked(op, u);

  StepReport report;
  report.rated_point = u;
  report.base_point = state.u_bar;
  report.field_norm_sq = g.squaredNorm();
  report.step_used = state.a;
  report.oracle_calls = 2;

  state.u_bar = state.u_bar - state.gamma * state.a * g;
  state.last_u = u;
  state.k += 1;
  return report;
}

// ---------------------------------------------------------------------------

AdaptiveEgState make_adaptive_eg(const Vec& u0, double a0, double tau, double gamma) {
  if (a0 <= 0.0) throw std::invalid_argument("adaptive eg+: a0 must be > 0");
  if (tau <= 0.0 || tau >= 1.0) throw std::invalid_argument("adaptive eg+: tau must be in (0, 1)");
  if (gamma <= 0.0 || gamma > 1.0)
    throw std::invalid_argument("adaptive eg+: gamma must be in (0, 1]");
  AdaptiveEgState s;
  s.u_bar = u0;
  s.a = a0;
  s.a0 = a0;
  s.tau = tau;
  s.gamma = gamma;
  return s;
}

StepReport adaptive_eg_step(AdaptiveEgState& state, const OperatorProblem& op) {
  if (state.k > 0) {
    const double prev = state.a;
    const double dg = (state.g_u_prev - state.g_u_bar_prev).norm();
    if (dg > 0.0) {
      const double candidate =
          state.tau * (state.u_prev - state.u_bar_prev).norm() / dg;
      state.a = std::min(state.a, candidate);
    }
    if (prev / state.a > 1.0 / state.tau) state.k0_candidate = state.k;
  }

  const Vec g_bar = eval_checked(op, state.u_bar);
  const Vec u = state.u_bar - state.a * g_bar;
  const Vec g = eval_checked(op, u);

  StepReport report;
  report.rated_point = u;
  report.base_point = state.u_bar;
  report.field_norm_sq = g.squaredNorm();
  report.step_used = state.a;
  report.oracle_calls = 2;

  state.u_prev = u;
  state.u_bar_prev = state.u_bar;
  state.g_u_prev = g;
  state.g_u_bar_prev = g_bar;
  state.u_bar = state.u_bar - state.a * state.gamma * g;
  state.k += 1;
  return report;
}

// ---------------------------------------------------------------------------

double ogda_step_size_bound(double gamma, double lambda) {
  if (gamma <= 0.0 || gamma > 1.0)
    throw std::invalid_argument("ogda_step_size_bound: gamma must be in (0, 1]");
  if (lambda < 0.0 || lambda > 2.0 / gamma)
    throw std::invalid_argument("ogda_step_size_bound: lambda must be in [0, 2/gamma]");
  return (2.0 - lambda * gamma - gamma) / (2.0 - lambda * gamma + gamma);
}

ConfigValidity validate_weak_minty_config(const OperatorProblem& op, double a,
                                          double gamma) {
  if (!op.lipschitz || !op.weak_minty_rho)
    throw std::invalid_argument(
        "validate_weak_minty_config: operator lacks lipschitz or weak_minty_rho metadata");
  const double L = *op.lipschitz;
  const double rho = *op.weak_minty_rho;

  ConfigValidity v;
  v.rho_margin = a - rho;
  v.step_margin = (1.0 - gamma) / (1.0 + gamma) - a * L;
  v.verdict = (v.rho_margin > 0.0 && v.step_margin >= 0.0) ? ConfigVerdict::Pass
                                                           : ConfigVerdict::TheoryGap;
  return v;
}

double ogda_lyapunov(const Vec& u, const Vec& g_prev, double a, const Vec& u_star) {
  return (u + a * g_prev - u_star).squaredNorm();
}

double adaptive_eg_lyapunov(const Vec& u_bar, double gamma, const Vec& u_star) {
  return (u_bar - u_star).squaredNorm() / gamma;
}

}  // namespace wmvi
