#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "wmvi/operators.hpp"

namespace wmvi {

enum class Algorithm { OgdaPlus, EgPlus, AdaptiveEgPlus, StochOgdaPlus };

Algorithm algorithm_from_string(const std::string& s);
std::string to_string(Algorithm a);

/// Hyperparameters shared by all solvers. `a` is the fixed step size,
/// or the initial step a0 for the adaptive method.
struct SolverConfig {
  Algorithm algorithm = Algorithm::OgdaPlus;
  double a = 0.33;
  double gamma = 0.5;
  double tau = 0.99;
  double sigma = 0.0;
  int batch = 1;
  int iters = 10000;
  double tol = 1e-6;
  std::uint64_t seed = 0;
  double divergence_radius = 1e12;
};

/// Outcome of a single solver step. `rated_point` is the point the
/// convergence theorems rate (u_k for all methods), `base_point` the
/// base iterate it was produced from (equal to rated_point for OGDA+).
struct StepReport {
  Vec rated_point;
  Vec base_point;
  double field_norm_sq = 0.0;
  double step_used = 0.0;
  int oracle_calls = 0;
};

/// Thrown when an operator evaluation produces non-finite values.
struct NonFiniteFieldError : std::runtime_error {
  explicit NonFiniteFieldError(const Vec& at);
  Vec point;
};

// ---------------------------------------------------------------------------
// OGDA+:  u_{k+1} = u_k - a ((1+gamma) F(u_k) - F(u_{k-1})),  u_{-1} = u_0.

struct OgdaPlusState {
  Vec u;
  Vec g_prev;  // F(u_{k-1})
  double a = 0.0;
  double gamma = 1.0;
  int k = 0;
};

/// Evaluates F(u0) once to seed g_prev (the u_{-1} = u_0 convention).
OgdaPlusState make_ogda_plus(const OperatorProblem& op, const Vec& u0, double a,
                             double gamma);
StepReport ogda_plus_step(OgdaPlusState& state, const OperatorProblem& op);

// ---------------------------------------------------------------------------
// EG+:  u_k = ubar_k - a F(ubar_k),  ubar_{k+1} = ubar_k - gamma a F(u_k).

struct EgPlusState {
  Vec u_bar;
  Vec last_u;
  double a = 0.0;
  double gamma = 1.0;
  int k = 0;
};

EgPlusState make_eg_plus(const Vec& u0, double a, double gamma);
StepReport eg_plus_step(EgPlusState& state, const OperatorProblem& op);

// ---------------------------------------------------------------------------
// EG+ with adaptive step size:
//   a_k = min{ a_{k-1}, tau ||u_{k-1}-ubar_{k-1}|| / ||F(u_{k-1})-F(ubar_{k-1})|| }
// (a_k = a_{k-1} when the denominator vanishes; a_0 used as-is at k=0).

struct AdaptiveEgState {
  Vec u_bar;
  double a = 0.0;  // current step a_k
  double a0 = 0.0;
  double tau = 0.99;
  double gamma = 0.5;
  int k = 0;
  // previous pair and cached field values, used by the step size rule
  Vec u_prev, u_bar_prev;
  Vec g_u_prev, g_u_bar_prev;
  // first index from which a_k / a_{k+1} <= 1/tau has held at every
  // observed step; provisional until the run ends
  int k0_candidate = 0;

  std::optional<int> k0() const { return k > 0 ? std::optional<int>(k0_candidate) : std::nullopt; }
};

AdaptiveEgState make_adaptive_eg(const Vec& u0, double a0, double tau, double gamma);
StepReport adaptive_eg_step(AdaptiveEgState& state, const OperatorProblem& op);

// ---------------------------------------------------------------------------

/// Largest admissible aL for OGDA+ given gamma in (0,1] and the free
/// analysis parameter lambda in [0, 2/gamma]:
///   aL <= (2 - lambda*gamma - gamma) / (2 - lambda*gamma + gamma).
/// lambda = 1/gamma recovers (1-gamma)/(1+gamma); the result may be
/// negative, signalling that no step size is admissible.
double ogda_step_size_bound(double gamma, double lambda);

enum class ConfigVerdict { Pass, TheoryGap };

/// Margins of the weak Minty step size conditions: a > rho and
/// aL <= (1-gamma)/(1+gamma). TheoryGap configurations still run;
/// several of the benchmarks converge only outside these conditions.
struct ConfigValidity {
  ConfigVerdict verdict = ConfigVerdict::TheoryGap;
  double rho_margin = 0.0;   // a - rho
  double step_margin = 0.0;  // (1-gamma)/(1+gamma) - aL
};

ConfigValidity validate_weak_minty_config(const OperatorProblem& op, double a,
                                          double gamma);

/// Lyapunov quantity ||u_k + a F(u_{k-1}) - u*||^2 whose telescoping
/// drives the fixed-step OGDA+ rate.
double ogda_lyapunov(const Vec& u, const Vec& g_prev, double a, const Vec& u_star);

/// Lyapunov quantity (1/gamma) ||ubar_k - u*||^2 for adaptive EG+.
double adaptive_eg_lyapunov(const Vec& u_bar, double gamma, const Vec& u_star);

}  // namespace wmvi
