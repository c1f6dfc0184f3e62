#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wmvi/operators.hpp"

namespace wmvi {

/// A named benchmark: the operator plus, where the problem is a
/// min-max objective, the objective itself.
struct BenchmarkSpec {
  std::string id;
  OperatorProblem problem;
  std::optional<MinMaxObjective> objective;
};

// f(x,y) = xi*x*y + zeta/2 (x^2 - y^2), F(x,y) = (zeta x + xi y, -xi x + zeta y).
// Solution (0,0), L = sqrt(xi^2+zeta^2), rho = max(0, -2 zeta / (xi^2+zeta^2)).
BenchmarkSpec lower_bound_problem(double xi, double zeta);

// 2-D reduction of the von Neumann ratio game instance
//   V(x,y) = (-1.2xy + 0.9y - 0.3) / (0.4y + 0.1x + 0.4)
// on [0,1]^2, with the published root (0.951941, 0.050485) and the
// published Lipschitz estimate L = 5/3.
BenchmarkSpec ratio_game_problem();

// f(x,y) = x(y - 0.45) + phi(x) - phi(y), phi(z) = z^2/4 - z^4/2 + z^6/6.
// The stationary point is stored to full precision; the stored rho is
// the tightest weak Minty modulus on the box ||.||_inf <= 1.4.
BenchmarkSpec forsaken_problem();

// F(x,y) = (psi(x,y) - y, psi(y,x) + x) with
// psi(x,y) = (1/16) a x (-1 + x^2 + y^2)(-9 + 16x^2 + 16y^2), a > 0.
BenchmarkSpec polar_game_problem(double a = 1.0 / 3.0);

// F(u) = mu * u on R^dim; monotone, L = mu, rho = 0, solution 0.
BenchmarkSpec monotone_quadratic_problem(double mu, int dim);

double forsaken_phi(double z);
double forsaken_phi_prime(double z);

/// Stable benchmark ids used by the CLI.
const std::vector<std::string>& benchmark_ids();

struct BenchmarkParams {
  double xi = 1.7320508075688772;  // lower-bound
  double zeta = -1.0;
  double polar_a = 1.0 / 3.0;  // polar-game
  double mu = 1.0;             // monotone-quadratic
  int dim = 2;
};

/// Builds a benchmark from its CLI id. Throws on unknown ids.
BenchmarkSpec make_benchmark(const std::string& id, const BenchmarkParams& params = {});

}  // namespace wmvi
