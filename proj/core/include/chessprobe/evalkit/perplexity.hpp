#pragma once

#include <optional>
#include <span>
#include <vector>

#include "chessprobe/chess/types.hpp"
#include "chessprobe/evalkit/prediction.hpp"
#include "chessprobe/notation/vocabulary.hpp"

namespace chessprobe::evalkit {

struct TokenLogProb {
  notation::Token token;
  double log_prob = 0.0;
  // Log of the probability the predictor gave to all piece-type tokens at
  // this step. Used only under PieceTypeMass::Renormalize.
  std::optional<double> piece_type_log_mass;
};

struct GameLogProbs {
  std::vector<chess::Move> moves;
  std::vector<TokenLogProb> tokens;  // plain UCI tokens, optionally with BOS/EOS
};

enum class PieceTypeMass {
  Excluded,     // the predictor already assigns no mass to piece-type tokens
  Renormalize,  // divide each probability by 1 - piece_type_mass
};

/// exp(-(sum of token log-probs) / (number of moves)). BOS and EOS entries are
/// accepted at the ends; their log-probs are included in the sum. Throws
/// Error(LengthMismatch) when the non-special token count differs from the
/// UCI tokenization and Error(MalformedSequence) when a token differs.
double canonical_perplexity(std::span<const GameLogProbs> games, PieceTypeMass mass = PieceTypeMass::Excluded);

/// Log-softmax over the vocabulary with piece-type logits masked to -inf.
ScoreRow mask_piece_types(const ScoreRow& logits);

}  // namespace chessprobe::evalkit
