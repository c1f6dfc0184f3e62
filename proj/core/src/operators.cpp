#include "wmvi/operators.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace wmvi {

Box Box::square(double lo, double hi, int dim) {
  Box b;
  b.lo = Vec::Constant(dim, lo);
  b.hi = Vec::Constant(dim, hi);
  return b;
}

bool Box::contains(const Vec& u) const {
  for (int i = 0; i < dim(); ++i) {
    if (u[i] < lo[i] || u[i] > hi[i]) return false;
  }
  return true;
}

OperatorProblem gradient_field(const MinMaxObjective& obj) {
  OperatorProblem op;
  op.dim = obj.dim_x + obj.dim_y;
  const int nx = obj.dim_x;
  const int ny = obj.dim_y;
  op.eval = [obj, nx, ny](const Vec& u) {
    const Vec x = u.head(nx);
    const Vec y = u.tail(ny);
    Vec out(nx + ny);
    out.head(nx) = obj.grad_x(x, y);
    out.tail(ny) = -obj.grad_y(x, y);
    return out;
  };
  return op;
}

double finite_difference_check(const MinMaxObjective& obj,
                               const std::vector<Vec>& points, double h) {
  if (h <= 0.0) throw std::invalid_argument("finite_difference_check: h must be > 0");
  if (points.empty()) throw std::invalid_argument("finite_difference_check: no points");

  const int nx = obj.dim_x;
  const int ny = obj.dim_y;
  double worst = 0.0;
  for (const Vec& u : points) {
    Vec x = u.head(nx);
    Vec y = u.tail(ny);
    Vec analytic(nx + ny);
    analytic.head(nx) = obj.grad_x(x, y);
    analytic.tail(ny) = obj.grad_y(x, y);

    Vec fd(nx + ny);
    for (int i = 0; i < nx; ++i) {
      Vec xp = x, xm = x;
      xp[i] += h;
      xm[i] -= h;
      fd[i] = (obj.value(xp, y) - obj.value(xm, y)) / (2 * h);
    }
    for (int j = 0; j < ny; ++j) {
      Vec yp = y, ym = y;
      yp[j] += h;
      ym[j] -= h;
      fd[nx + j] = (obj.value(x, yp) - obj.value(x, ym)) / (2 * h);
    }
    const double err = (fd - analytic).norm() / std::max(1.0, analytic.norm());
    worst = std::max(worst, err);
  }
  return worst;
}

std::vector<Vec> sample_box(const Box& region, int n, std::uint64_t seed) {
  const int d = region.dim();
  for (int i = 0; i < d; ++i) {
    if (!(region.hi[i] > region.lo[i]))
      throw std::invalid_argument("sample_box: degenerate region");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Vec> out;
  out.reserve(n);
  for (int k = 0; k < n; ++k) {
    Vec u(d);
    for (int i = 0; i < d; ++i) {
      u[i] = region.lo[i] + (region.hi[i] - region.lo[i]) * unit(rng);
    }
    out.push_back(std::move(u));
  }
  return out;
}

double estimate_lipschitz(const OperatorProblem& op, const Box& region,
                          int samples, std::uint64_t seed) {
  if (samples < 2) throw std::invalid_argument("estimate_lipschitz: samples must be >= 2");
  const std::vector<Vec> pts = sample_box(region, samples, seed);
  std::vector<Vec> vals;
  vals.reserve(pts.size());
  for (const Vec& u : pts) vals.push_back(op.eval(u));

  double best = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const double du = (pts[i] - pts[j]).norm();
      if (du == 0.0) continue;
      best = std::max(best, (vals[i] - vals[j]).norm() / du);
    }
  }
  return best;
}

double estimate_weak_minty_rho(const OperatorProblem& op, const Box& region,
                               int samples, std::uint64_t seed) {
  if (!op.solution)
    throw std::invalid_argument("estimate_weak_minty_rho: operator has no known solution");
  if (samples < 1) throw std::invalid_argument("estimate_weak_minty_rho: samples must be >= 1");
  const Vec& star = *op.solution;
  double worst = 0.0;
  for (const Vec& u : sample_box(region, samples, seed)) {
    const Vec g = op.eval(u);
    const double nsq = g.squaredNorm();
    if (nsq < 1e-14) continue;
    worst = std::max(worst, -2.0 * g.dot(u - star) / nsq);
  }
  return worst;
}

}  // namespace wmvi
