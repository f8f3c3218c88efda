#include "chessprobe/evalkit/perplexity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "chessprobe/error.hpp"
#include "chessprobe/notation/tokenize.hpp"

namespace chessprobe::evalkit {

using notation::Token;
using notation::TokenClass;

double canonical_perplexity(std::span<const GameLogProbs> games, PieceTypeMass mass) {
  double log_prob_sum = 0.0;
  std::size_t move_count = 0;
  for (std::size_t g = 0; g < games.size(); ++g) {
    const GameLogProbs& game = games[g];
    const std::vector<Token> expected = notation::uci_tokens(game.moves);
    std::span<const TokenLogProb> body(game.tokens);
    double special = 0.0;
    if (!body.empty() && body.front().token == Token::bos()) {
      special += body.front().log_prob;
      body = body.subspan(1);
    }
    if (!body.empty() && body.back().token == Token::eos()) {
      special += body.back().log_prob;
      body = body.first(body.size() - 1);
    }
    if (body.size() != expected.size()) {
      throw Error(ErrorCode::LengthMismatch, "game " + std::to_string(g) + ": " + std::to_string(body.size()) +
                                                 " scored tokens, tokenization has " + std::to_string(expected.size()));
    }
    log_prob_sum += special;
    for (std::size_t i = 0; i < body.size(); ++i) {
      if (body[i].token != expected[i]) {
        throw Error(ErrorCode::MalformedSequence, "game " + std::to_string(g) + " token " + std::to_string(i) +
                                                      ": expected " + std::string(expected[i].text()));
      }
      double lp = body[i].log_prob;
      if (mass == PieceTypeMass::Renormalize && body[i].piece_type_log_mass) {
        lp -= std::log1p(-std::exp(*body[i].piece_type_log_mass));
      }
      log_prob_sum += lp;
    }
    move_count += game.moves.size();
  }
  if (move_count == 0) throw Error(ErrorCode::EmptyResults, "perplexity needs at least one move");
  return std::exp(-log_prob_sum / static_cast<double>(move_count));
}

ScoreRow mask_piece_types(const ScoreRow& logits) {
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  ScoreRow out = logits;
  double max_logit = kNegInf;
  for (int id = 0; id < Token::kVocabularySize; ++id) {
    if (Token::from_id(id).token_class() == TokenClass::PieceType) {
      out[id] = kNegInf;
    } else {
      max_logit = std::max(max_logit, logits[id]);
    }
  }
  double z = 0.0;
  for (double v : out) {
    if (v != kNegInf) z += std::exp(v - max_logit);
  }
  const double log_z = max_logit + std::log(z);
  for (double& v : out) {
    if (v != kNegInf) v -= log_z;
  }
  return out;
}

}  // namespace chessprobe::evalkit
