#pragma once

#include <cstdint>

#include "wmvi/algorithms.hpp"
#include "wmvi/operators.hpp"

namespace wmvi {

/// Unbiased noisy view of an operator: each sample is F(u) + sigma*eta
/// with eta standard normal per coordinate. Samples are indexed by a
/// running counter, so a draw depends only on (seed, sample index) and
/// batches may be evaluated in any order or in parallel.
struct StochasticOracle {
  OperatorProblem base;
  double sigma = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t sample_counter = 0;
};

/// Mean of `batch` i.i.d. samples at u; advances the counter by `batch`.
/// With sigma = 0 this returns F(u) exactly.
Vec batch_estimate(StochasticOracle& oracle, const Vec& u, int batch);

/// Batch size from the O(1/eps) rule: max{1, ceil(4 sigma^2 / (a L eps))},
/// which drives the per-iteration estimator variance down to a*L*eps/4.
int required_batch_size(double sigma, double a, double L, double epsilon);

// ---------------------------------------------------------------------------
// Stochastic OGDA+: u_{k+1} = u_k - a ((1+gamma) gtilde_k - gtilde_{k-1})
// with gtilde_k a fresh batch estimate at u_k.

struct StochOgdaState {
  Vec u;
  Vec g_tilde_prev;
  double a = 0.0;
  double gamma = 1.0;
  int batch = 1;
  int k = 0;
};

/// Draws the initial batch estimate at u0 (the u_{-1} = u_0 convention).
StochOgdaState make_stoch_ogda(StochasticOracle& oracle, const Vec& u0, double a,
                               double gamma, int batch);

/// One update. The report counts `batch` oracle calls and records the
/// true ||F(u_k)||^2 for diagnostics; the update itself never sees the
/// noise-free field.
StepReport stoch_ogda_plus_step(StochOgdaState& state, StochasticOracle& oracle);

}  // namespace wmvi
