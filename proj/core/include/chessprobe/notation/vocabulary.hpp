#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chessprobe/chess/types.hpp"

namespace chessprobe::notation {

enum class TokenClass { Square, PieceType, Promotion, Special };

// One of the 77 vocabulary symbols. Ids follow the frozen vocabulary order:
//   0..63   squares, file-major (a1, a2, ..., a8, b1, ..., h8)
//   64..69  piece types P N B R Q K
//   70..73  promoted-pawn types q r b n
//   74..76  BOS EOS PAD
class Token {
 public:
  static constexpr int kVocabularySize = 77;

  constexpr Token() = default;

  static Token square(chess::Square s);
  static Token piece(chess::PieceType t);
  /// Promotion tokens exist for Q, R, B, N only; other types throw InvalidArgument.
  static Token promotion(chess::PieceType t);
  static constexpr Token bos() { return Token(74); }
  static constexpr Token eos() { return Token(75); }
  static constexpr Token pad() { return Token(76); }

  static std::optional<Token> parse(std::string_view text);
  static Token from_id(int id);

  constexpr int id() const { return id_; }
  TokenClass token_class() const;
  std::string_view text() const;

  std::optional<chess::Square> as_square() const;
  std::optional<chess::PieceType> as_piece_type() const;
  std::optional<chess::PieceType> as_promotion() const;

  friend constexpr auto operator<=>(Token, Token) = default;

 private:
  constexpr explicit Token(int id) : id_(static_cast<std::uint8_t>(id)) {}

  std::uint8_t id_ = 0;
};

/// All 77 tokens in id order.
const std::array<Token, Token::kVocabularySize>& vocabulary();

/// One token per line, index = line number, LF endings.
void write_vocabulary(std::ostream& out);

/// Reads a vocabulary file and checks it against the built-in order; throws
/// Error(UnknownToken) naming the first mismatching line.
void verify_vocabulary(std::istream& in);

/// Space-separated token text.
std::string join_tokens(std::span<const Token> tokens);

/// Splits on whitespace; throws Error(UnknownToken) on anything outside the vocabulary.
std::vector<Token> parse_tokens(std::string_view line);

}  // namespace chessprobe::notation
