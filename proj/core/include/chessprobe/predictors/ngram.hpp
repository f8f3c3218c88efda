#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <vector>

#include "chessprobe/datagen/probes.hpp"
#include "chessprobe/evalkit/prediction.hpp"
#include "chessprobe/notation/vocabulary.hpp"

namespace chessprobe::predictors {

// Token n-gram model with additive smoothing. Contexts are the last
// (order - 1) tokens and never reach back past the most recent BOS, so
// positions near the start of a game use shorter contexts.
class NGramModel {
 public:
  explicit NGramModel(int order = 3, double smoothing = 0.01);

  int order() const { return order_; }
  double smoothing() const { return smoothing_; }

  /// Adds one tokenized game (as written to token files, BOS first).
  void train(std::span<const notation::Token> sequence);

  /// Smoothed next-token probabilities over the vocabulary; sums to 1.
  /// A context never seen in training (with zero smoothing) gives a uniform row.
  evalkit::ScoreRow next_distribution(std::span<const notation::Token> context) const;

  evalkit::Prediction predict(const datagen::ProbeInstance& probe) const;

  /// Text format: "ngram <order> <smoothing>" then sorted lines
  /// "<context tokens or ->\t<token>\t<count>".
  void save(std::ostream& out) const;
  static NGramModel load(std::istream& in);

 private:
  using Context = std::vector<std::uint8_t>;

  Context context_of(std::span<const notation::Token> tokens) const;

  int order_;
  double smoothing_;
  std::map<Context, std::map<std::uint8_t, std::uint64_t>> counts_;
};

}  // namespace chessprobe::predictors
