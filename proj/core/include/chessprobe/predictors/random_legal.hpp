#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "chessprobe/datagen/probes.hpp"
#include "chessprobe/evalkit/prediction.hpp"

namespace chessprobe::predictors {

/// The gold answers in a seeded uniform order, then every other token in
/// vocabulary order. The shuffle seed is derived from `seed` and the probe id,
/// so predictions do not depend on probe order.
evalkit::Prediction random_legal_predict(const datagen::ProbeInstance& probe, std::uint64_t seed);

/// Mean of 1 / |lgm_gold| over probes that carry an exact-move answer.
/// Throws Error(EmptyResults) when there are none.
double random_legal_expected_exm(std::span<const datagen::ProbeInstance> probes);

struct MonteCarloEstimate {
  std::size_t trials = 0;      // full passes over the probe set
  std::size_t draws = 0;       // trials * probes
  double mean = 0.0;           // observed ExM accuracy
  double expected = 0.0;       // analytic value
  double ci_half_width = 0.0;  // 99% normal interval around `expected`
  bool within_ci() const { return mean >= expected - ci_half_width && mean <= expected + ci_half_width; }
};

/// Runs random_legal_predict `trials` times over the Actual probes with
/// per-trial seeds and compares the hit rate with the analytic value. Hits are
/// a sum of independent Bernoulli(1/R_i) draws, so the interval uses the
/// Poisson-binomial variance.
MonteCarloEstimate random_legal_monte_carlo(std::span<const datagen::ProbeInstance> probes, std::size_t trials,
                                            std::uint64_t seed);

}  // namespace chessprobe::predictors
