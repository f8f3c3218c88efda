#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chessprobe/chess/types.hpp"
#include "chessprobe/notation/vocabulary.hpp"
#include "chessprobe/random.hpp"

namespace chessprobe::notation {

// How piece-type tokens are attached to moves:
//   Uci     never
//   UciRap  independently per move with probability p
//   UciAp   always
class NotationScheme {
 public:
  enum class Kind { Uci, UciRap, UciAp };

  static NotationScheme uci() { return NotationScheme(Kind::Uci, 0.0); }
  /// Throws Error(InvalidArgument) unless 0 <= p <= 1.
  static NotationScheme rap(double p);
  static NotationScheme ap() { return NotationScheme(Kind::UciAp, 1.0); }

  /// "uci", "ap", or "rap:<p>" with p a probability.
  static NotationScheme parse(std::string_view text);

  Kind kind() const { return kind_; }
  double rap_probability() const { return probability_; }
  std::string to_string() const;

  friend bool operator==(const NotationScheme&, const NotationScheme&) = default;

 private:
  NotationScheme(Kind kind, double p) : kind_(kind), probability_(p) {}

  Kind kind_;
  double probability_;
};

struct TokenSequence {
  std::vector<Token> tokens;
  NotationScheme scheme = NotationScheme::uci();
};

/// Renders a game as tokens: [piece type] from-square to-square [promotion] per
/// move, no move delimiters. The piece-type token is the uppercase type of the
/// moving piece (P for promoting pawns). Under UciRap one Bernoulli draw is
/// taken from `rng` per move; the other schemes leave `rng` untouched.
/// Throws Error(IllegalGame) if the moves do not replay legally from the start.
TokenSequence tokenize_game(std::span<const chess::Move> moves, const NotationScheme& scheme, Rng& rng);

/// Plain UCI tokens of a game; no legality check and no BOS/EOS.
std::vector<Token> uci_tokens(std::span<const chess::Move> moves);

/// Groups square tokens into moves, skipping piece-type tokens, a leading BOS,
/// a trailing EOS and trailing PAD. Throws Error(MalformedSequence) for a
/// dangling square, a stray promotion or piece-type token, a special token
/// mid-game, or a move that does not replay legally.
std::vector<chess::Move> detokenize(std::span<const Token> tokens);

/// "BOS <tokens> EOS", the line format of token files.
std::string token_file_line(const TokenSequence& sequence);

}  // namespace chessprobe::notation
