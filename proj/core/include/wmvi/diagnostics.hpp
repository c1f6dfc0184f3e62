#pragma once

#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "wmvi/algorithms.hpp"
#include "wmvi/operators.hpp"

namespace wmvi {

enum class RunStatus { Converged, Diverged, BudgetExhausted };

std::string to_string(RunStatus s);

struct TraceRow {
  int k = 0;
  Vec u;                 // rated point u_k
  Vec base;              // base point (ubar_k for EG variants, u_k otherwise)
  double field_norm_sq = 0.0;
  double step = 0.0;
  long cumulative_oracle_calls = 0;
};

/// Append-only per-iteration record with running best-iterate tracking.
struct IterateTrace {
  std::vector<TraceRow> rows;
  double best_norm_sq = std::numeric_limits<double>::infinity();
  int best_index = -1;
  RunStatus status = RunStatus::BudgetExhausted;

  void append(TraceRow row);
  bool empty() const { return rows.empty(); }
};

enum class TheoremId { OgdaWeakMinty, OgdaMonotone, AdaptiveEg };

std::string to_string(TheoremId t);

/// Best-iterate rate bound evaluated along a recorded run. bound_at_k[k]
/// bounds min_{i<k} ||F(u_i)||^2 (or min over i in [k0, k] for the
/// adaptive method); entries before the bound applies are +inf.
struct RateCertificate {
  TheoremId theorem = TheoremId::OgdaWeakMinty;
  bool applicable = false;
  std::string reason;
  std::vector<double> bound_at_k;
  std::optional<int> violated_at;
  int k0 = 0;  // adaptive method only
};

/// Evaluates the certificate matching the run's algorithm:
/// fixed-step OGDA+ against either the weak Minty rate or, for operators
/// declared monotone, the sharper monotone rate; adaptive EG+ against the
/// post-hoc rate using the detected k0 and the final step size.
/// Requires op.solution; marks not-applicable (with reason) when the
/// respective step size preconditions fail.
RateCertificate evaluate_certificate(const IterateTrace& trace,
                                     const OperatorProblem& op,
                                     const SolverConfig& config);

struct SignGrid {
  double x_lo = 0, x_hi = 1, y_lo = 0, y_hi = 1;
  int nx = 0, ny = 0;
  // values(i, j) = sign(<F(u), u-u*>) at x_i = x_lo + i*dx, y_j = y_lo + j*dy
  Eigen::MatrixXi values;
};

/// sign(<F(u), u-u*>) on a regular grid; 0 where |.| < 1e-12.
SignGrid sign_grid(const OperatorProblem& op, double x_lo, double x_hi,
                   double y_lo, double y_hi, int nx, int ny);

/// <F(u), u-u*> + (rho/2)||F(u)||^2; nonnegative wherever the weak
/// Minty inequality holds with the stored rho.
double weak_minty_residual(const OperatorProblem& op, const Vec& u);

/// converged iff best ||F||^2 <= tol^2; diverged iff the magnitude
/// guard tripped during the run; budget_exhausted otherwise.
RunStatus classify_run(const IterateTrace& trace, double tol);

// CSV export (UTF-8, LF, 17 significant digits).
// trace:       k,u_0..u_{d-1},field_norm_sq,step,oracle_calls
// certificate: k,bound,best_norm_sq,ok
// grid:        x,y,sign
void write_trace_csv(std::ostream& os, const IterateTrace& trace);
void write_certificate_csv(std::ostream& os, const RateCertificate& cert,
                           const IterateTrace& trace);
void write_sign_grid_csv(std::ostream& os, const SignGrid& grid);

}  // namespace wmvi
