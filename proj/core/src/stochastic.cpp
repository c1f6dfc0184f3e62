#include "wmvi/stochastic.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace wmvi {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Vec batch_estimate(StochasticOracle& oracle, const Vec& u, int batch) {
  if (batch < 1) throw std::invalid_argument("batch_estimate: batch must be >= 1");
  const Vec f = oracle.base.eval(u);
  if (oracle.sigma == 0.0) {
    oracle.sample_counter += batch;
    return f;
  }
  Vec noise = Vec::Zero(f.size());
  for (int i = 0; i < batch; ++i) {
    // one generator per sample index: partition-independent determinism
    std::mt19937_64 rng(splitmix64(oracle.seed ^ splitmix64(oracle.sample_counter + i)));
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int j = 0; j < f.size(); ++j) noise[j] += gauss(rng);
  }
  oracle.sample_counter += batch;
  return f + (oracle.sigma / batch) * noise;
}

int required_batch_size(double sigma, double a, double L, double epsilon) {
  if (sigma < 0.0) throw std::invalid_argument("required_batch_size: sigma must be >= 0");
  if (a <= 0.0 || L <= 0.0 || epsilon <= 0.0)
    throw std::invalid_argument("required_batch_size: a, L, epsilon must be > 0");
  const double raw = 4.0 * sigma * sigma / (a * L * epsilon);
  return std::max(1, static_cast<int>(std::ceil(raw)));
}

StochOgdaState make_stoch_ogda(StochasticOracle& oracle, const Vec& u0, double a,
                               double gamma, int batch) {
  if (a <= 0.0) throw std::invalid_argument("stoch ogda+: step size must be > 0");
  if (gamma <= 0.0 || gamma > 1.0)
    throw std::invalid_argument("stoch ogda+: gamma must be in (0, 1]");
  if (batch < 1) throw std::invalid_argument("stoch ogda+: batch must be >= 1");
  StochOgdaState s;
  s.u = u0;
  s.g_tilde_prev = batch_estimate(oracle, u0, batch);
  s.a = a;
  s.gamma = gamma;
  s.batch = batch;
  return s;
}

StepReport stoch_ogda_plus_step(StochOgdaState& state, StochasticOracle& oracle) {
  const Vec g_tilde = batch_estimate(oracle, state.u, state.batch);
  if (!g_tilde.allFinite()) throw NonFiniteFieldError(state.u);
  const Vec f_true = oracle.base.eval(state.u);

  StepReport report;
  report.rated_point = state.u;
  report.base_point = state.u;
  report.field_norm_sq = f_true.squaredNorm();
  report.step_used = state.a;
  report.oracle_calls = state.batch;

  state.u = state.u - state.a * ((1.0 + state.gamma) * g_tilde - state.g_tilde_prev);
  state.g_tilde_prev = g_tilde;
  state.k += 1;
  return report;
}

}  // namespace wmvi
