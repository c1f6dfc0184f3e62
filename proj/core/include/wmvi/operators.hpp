#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace wmvi {

using Vec = Eigen::VectorXd;

/// Axis-aligned box, used as sampling region and validity region.
struct Box {
  Vec lo;
  Vec hi;

  static Box square(double lo, double hi, int dim = 2);
  int dim() const { return static_cast<int>(lo.size()); }
  bool contains(const Vec& u) const;
};

/// An operator F: R^d -> R^d together with whatever metadata is known
/// about it. Evaluation must be deterministic and side-effect free.
struct OperatorProblem {
  int dim = 0;
  std::function<Vec(const Vec&)> eval;
  std::optional<double> lipschitz;
  std::optional<double> weak_minty_rho;
  std::optional<Vec> solution;
  // Region on which the stored weak_minty_rho is valid (unset: everywhere).
  std::optional<Box> validity_region;
  bool monotone = false;
  std::string name;

  Vec operator()(const Vec& u) const { return eval(u); }
};

/// Smooth objective f(x, y) to be minimized in x and maximized in y,
/// with hand-derived gradients.
struct MinMaxObjective {
  int dim_x = 0;
  int dim_y = 0;
  std::function<double(const Vec&, const Vec&)> value;
  std::function<Vec(const Vec&, const Vec&)> grad_x;
  std::function<Vec(const Vec&, const Vec&)> grad_y;
};

/// The saddle-point field F(x,y) = (grad_x f, -grad_y f) as an operator
/// on R^{dim_x+dim_y}. Metadata is left unset.
OperatorProblem gradient_field(const MinMaxObjective& obj);

/// Max over points of the relative deviation between the analytic
/// gradients of obj and central finite differences of its value.
double finite_difference_check(const MinMaxObjective& obj,
                               const std::vector<Vec>& points, double h);

/// Deterministic uniform samples in a box. The full list is generated
/// up front so results do not depend on evaluation order.
std::vector<Vec> sample_box(const Box& region, int n, std::uint64_t seed);

/// Max secant slope ||F(u)-F(v)|| / ||u-v|| over all pairs of sampled
/// points. A lower bound on the true Lipschitz constant of the region.
double estimate_lipschitz(const OperatorProblem& op, const Box& region,
                          int samples, std::uint64_t seed);

/// Smallest rho for which the weak Minty inequality
///   <F(u), u-u*> >= -rho/2 ||F(u)||^2
/// holds at all sampled points; clamped at zero. Points with
/// ||F(u)||^2 < 1e-14 are skipped. Requires op.solution.
double estimate_weak_minty_rho(const OperatorProblem& op, const Box& region,
                               int samples, std::uint64_t seed);

}  // namespace wmvi
