#include "chessprobe/predictors/random_legal.hpp"

#include <bitset>
#include <cmath>
#include <string>

#include "chessprobe/error.hpp"
#include "chessprobe/random.hpp"

namespace chessprobe::predictors {

using notation::Token;

evalkit::Prediction random_legal_predict(const datagen::ProbeInstance& probe, std::uint64_t seed) {
  std::vector<Token> gold;
  for (chess::Square s : probe.lgm_gold) gold.push_back(Token::square(s));
  Rng rng(derive_seed(seed, probe.id));
  rng.shuffle(std::span(gold));

  evalkit::Prediction p;
  p.probe_id = probe.id;
  p.ranked = gold;
  p.ranked.reserve(Token::kVocabularySize);
  std::bitset<Token::kVocabularySize> used;
  for (Token t : gold) used.set(static_cast<std::size_t>(t.id()));
  for (int id = 0; id < Token::kVocabularySize; ++id) {
    if (!used.test(static_cast<std::size_t>(id))) p.ranked.push_back(Token::from_id(id));
  }
  return p;
}

double random_legal_expected_exm(std::span<const datagen::ProbeInstance> probes) {
  double sum = 0.0;
  std::size_t n = 0;
  for (const auto& p : probes) {
    if (!p.exm_gold) continue;
    sum += 1.0 / p.lgm_gold.size();
    ++n;
  }
  if (n == 0) throw Error(ErrorCode::EmptyResults, "no probes with an exact-move answer");
  return sum / static_cast<double>(n);
}

MonteCarloEstimate random_legal_monte_carlo(std::span<const datagen::ProbeInstance> probes, std::size_t trials,
                                            std::uint64_t seed) {
  MonteCarloEstimate est;
  est.expected = random_legal_expected_exm(probes);
  est.trials = trials;
  double variance_per_trial = 0.0;
  std::size_t actual = 0;
  for (const auto& p : probes) {
    if (!p.exm_gold) continue;
    const double q = 1.0 / p.lgm_gold.size();
    variance_per_trial += q * (1.0 - q);
    ++actual;
  }
  std::size_t hits = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = derive_seed(seed, "trial-" + std::to_string(t));
    for (const auto& p : probes) {
      if (!p.exm_gold) continue;
      const auto top = random_legal_predict(p, trial_seed).ranked.front().as_square();
      hits += top == p.exm_gold;
    }
  }
  est.draws = trials * actual;
  if (est.draws == 0) return est;
  const double draws = static_cast<double>(est.draws);
  est.mean = static_cast<double>(hits) / draws;
  constexpr double kZ99 = 2.576;
  est.ci_half_width = kZ99 * std::sqrt(variance_per_trial * static_cast<double>(trials)) / draws;
  return est;
}

}  // namespace chessprobe::predictors
