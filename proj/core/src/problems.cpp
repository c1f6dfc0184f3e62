#include "wmvi/problems.hpp"

#include <cmath>
#include <stdexcept>

namespace wmvi {

namespace {

Vec vec2(double x, double y) {
  Vec v(2);
  v << x, y;
  return v;
}

// Stationary point of the forsaken field, refined from the commonly
// quoted (0.08, 0.4) until ||F|| vanishes to machine precision.
constexpr double kForsakenRootX = 0.078026668738460078;
constexpr double kForsakenRootY = 0.41193385136581984;

// Tightest weak Minty modulus of the forsaken field on the box
// ||(x,y)||_inf <= 1.4 w.r.t. the refined root, computed on a dense
// grid with local refinement (max of -2<F(u),u-u*>/||F(u)||^2, attained
// near (-0.258, 0.792); value 3.0411323..., rounded up).
constexpr double kForsakenRho = 3.04114;

}  // namespace

double forsaken_phi(double z) {
  return z * z / 4.0 - std::pow(z, 4) / 2.0 + std::pow(z, 6) / 6.0;
}

double forsaken_phi_prime(double z) {
  return z / 2.0 - 2.0 * std::pow(z, 3) + std::pow(z, 5);
}

BenchmarkSpec lower_bound_problem(double xi, double zeta) {
  if (xi == 0.0 && zeta == 0.0)
    throw std::invalid_argument("lower_bound_problem: (xi, zeta) must not be (0, 0)");

  MinMaxObjective obj;
  obj.dim_x = obj.dim_y = 1;
  obj.value = [xi, zeta](const Vec& x, const Vec& y) {
    return xi * x[0] * y[0] + zeta / 2.0 * (x[0] * x[0] - y[0] * y[0]);
  };
  obj.grad_x = [xi, zeta](const Vec& x, const Vec& y) {
    return Vec::Constant(1, xi * y[0] + zeta * x[0]);
  };
  obj.grad_y = [xi, zeta](const Vec& x, const Vec& y) {
    return Vec::Constant(1, xi * x[0] - zeta * y[0]);
  };

  BenchmarkSpec spec;
  spec.id = "lower-bound";
  spec.objective = obj;
  spec.problem = gradient_field(obj);
  spec.problem.name = "lower-bound";
  spec.problem.lipschitz = std::sqrt(xi * xi + zeta * zeta);
  spec.problem.weak_minty_rho = std::max(0.0, -2.0 * zeta / (xi * xi + zeta * zeta));
  spec.problem.solution = vec2(0.0, 0.0);
  spec.problem.monotone = zeta >= 0.0;
  return spec;
}

BenchmarkSpec ratio_game_problem() {
  MinMaxObjective obj;
  obj.dim_x = obj.dim_y = 1;
  obj.value = [](const Vec& xv, const Vec& yv) {
    const double x = xv[0], y = yv[0];
    return (-1.2 * x * y + 0.9 * y - 0.3) / (0.4 * y + 0.1 * x + 0.4);
  };
  // Quotient rule on N = -1.2xy + 0.9y - 0.3, D = 0.4y + 0.1x + 0.4.
  obj.grad_x = [](const Vec& xv, const Vec& yv) {
    const double x = xv[0], y = yv[0];
    const double n = -1.2 * x * y + 0.9 * y - 0.3;
    const double d = 0.4 * y + 0.1 * x + 0.4;
    return Vec::Constant(1, (-1.2 * y * d - 0.1 * n) / (d * d));
  };
  obj.grad_y = [](const Vec& xv, const Vec& yv) {
    const double x = xv[0], y = yv[0];
    const double n = -1.2 * x * y + 0.9 * y - 0.3;
    const double d = 0.4 * y + 0.1 * x + 0.4;
    return Vec::Constant(1, ((-1.2 * x + 0.9) * d - 0.4 * n) / (d * d));
  };

  BenchmarkSpec spec;
  spec.id = "ratio-game";
  spec.objective = obj;
  spec.problem = gradient_field(obj);
  spec.problem.name = "ratio-game";
  spec.problem.solution = vec2(0.951941, 0.050485);
  spec.problem.lipschitz = 5.0 / 3.0;
  return spec;
}

BenchmarkSpec forsaken_problem() {
  MinMaxObjective obj;
  obj.dim_x = obj.dim_y = 1;
  obj.value = [](const Vec& x, const Vec& y) {
    return x[0] * (y[0] - 0.45) + forsaken_phi(x[0]) - forsaken_phi(y[0]);
  };
  obj.grad_x = [](const Vec& x, const Vec& y) {
    return Vec::Constant(1, y[0] - 0.45 + forsaken_phi_prime(x[0]));
  };
  obj.grad_y = [](const Vec& x, const Vec& y) {
    return Vec::Constant(1, x[0] - forsaken_phi_prime(y[0]));
  };

  BenchmarkSpec spec;
  spec.id = "forsaken";
  spec.objective = obj;
  spec.problem = gradient_field(obj);
  spec.problem.name = "forsaken";
  spec.problem.solution = vec2(kForsakenRootX, kForsakenRootY);
  spec.problem.weak_minty_rho = kForsakenRho;
  spec.problem.validity_region = Box::square(-1.5, 1.5);
  spec.problem.lipschitz =
      estimate_lipschitz(spec.problem, Box::square(-1.5, 1.5), 2000, 12345);
  return spec;
}

BenchmarkSpec polar_game_problem(double a) {
  if (a <= 0.0) throw std::invalid_argument("polar_game_problem: a must be > 0");
  auto psi = [a](double x, double y) {
    return (1.0 / 16.0) * a * x * (-1.0 + x * x + y * y) * (-9.0 + 16.0 * x * x + 16.0 * y * y);
  };

  BenchmarkSpec spec;
  spec.id = "polar-game";
  spec.problem.dim = 2;
  spec.problem.name = "polar-game";
  spec.problem.eval = [psi](const Vec& u) {
    return vec2(psi(u[0], u[1]) - u[1], psi(u[1], u[0]) + u[0]);
  };
  spec.problem.solution = vec2(0.0, 0.0);
  return spec;
}

BenchmarkSpec monotone_quadratic_problem(double mu, int dim) {
  if (mu <= 0.0) throw std::invalid_argument("monotone_quadratic_problem: mu must be > 0");
  if (dim < 1) throw std::invalid_argument("monotone_quadratic_problem: dim must be >= 1");

  BenchmarkSpec spec;
  spec.id = "monotone-quadratic";
  spec.problem.dim = dim;
  spec.problem.name = "monotone-quadratic";
  spec.problem.eval = [mu](const Vec& u) { return Vec(mu * u); };
  spec.problem.solution = Vec::Zero(dim);
  spec.problem.lipschitz = mu;
  spec.problem.weak_minty_rho = 0.0;
  spec.problem.monotone = true;
  return spec;
}

const std::vector<std::string>& benchmark_ids() {
  static const std::vector<std::string> ids = {
      "lower-bound", "ratio-game", "forsaken", "polar-game", "monotone-quadratic"};
  return ids;
}

BenchmarkSpec make_benchmark(const std::string& id, const BenchmarkParams& params) {
  if (id == "lower-bound") return lower_bound_problem(params.xi, params.zeta);
  if (id == "ratio-game") return ratio_game_problem();
  if (id == "forsaken") return forsaken_problem();
  if (id == "polar-game") return polar_game_problem(params.polar_a);
  if (id == "monotone-quadratic") return monotone_quadratic_problem(params.mu, params.dim);
  throw std::invalid_argument("unknown benchmark id: " + id);
}

}  // namespace wmvi
