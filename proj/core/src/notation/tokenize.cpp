#include "chessprobe/notation/tokenize.hpp"

#include <charconv>
#include <cstdlib>

#include "chessprobe/chess/movegen.hpp"
#include "chessprobe/error.hpp"
#include "chessprobe/notation/moves.hpp"

namespace chessprobe::notation {

using chess::Board;
using chess::Move;

NotationScheme NotationScheme::rap(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "RAP probability must lie in [0, 1]");
  }
  return NotationScheme(Kind::UciRap, p);
}

NotationScheme NotationScheme::parse(std::string_view text) {
  if (text == "uci") return uci();
  if (text == "ap") return ap();
  if (text.starts_with("rap:")) {
    const std::string number(text.substr(4));
    char* end = nullptr;
    const double p = std::strtod(number.c_str(), &end);
    if (!number.empty() && end == number.c_str() + number.size()) return rap(p);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown notation scheme '" + std::string(text) + "'");
}

std::string NotationScheme::to_string() const {
  switch (kind_) {
    case Kind::Uci: return "uci";
    case Kind::UciAp: return "ap";
    case Kind::UciRap: {
      char buf[32];
      auto [end, ec] = std::to_chars(buf, buf + sizeof buf, probability_);
      return "rap:" + std::string(buf, end);
    }
  }
  return "uci";
}

namespace {

void append_move_tokens(std::vector<Token>& out, const Move& m) {
  out.push_back(Token::square(m.from));
  out.push_back(Token::square(m.to));
  if (m.promotion) out.push_back(Token::promotion(*m.promotion));
}

}  // namespace

std::vector<Token> uci_tokens(std::span<const Move> moves) {
  std::vector<Token> out;
  out.reserve(moves.size() * 2 + 2);
  for (const Move& m : moves) append_move_tokens(out, m);
  return out;
}

TokenSequence tokenize_game(std::span<const Move> moves, const NotationScheme& scheme, Rng& rng) {
  TokenSequence seq{{}, scheme};
  seq.tokens.reserve(moves.size() * 3);
  Board board = Board::initial();
  for (std::size_t i = 0; i < moves.size(); ++i) {
    const Move& m = moves[i];
    auto piece = board.piece_at(m.from);
    bool annotate = false;
    switch (scheme.kind()) {
      case NotationScheme::Kind::Uci: break;
      case NotationScheme::Kind::UciAp: annotate = true; break;
      case NotationScheme::Kind::UciRap: annotate = rng.bernoulli(scheme.rap_probability()); break;
    }
    try {
      board = chess::apply_move(board, m);
    } catch (const Error&) {
      throw Error(ErrorCode::IllegalGame, "ply " + std::to_string(i + 1) + " (" + uci_print(m) + ") is illegal");
    }
    if (annotate) seq.tokens.push_back(Token::piece(piece->type));
    append_move_tokens(seq.tokens, m);
  }
  return seq;
}

std::vector<Move> detokenize(std::span<const Token> tokens) {
  std::size_t begin = 0;
  std::size_t end = tokens.size();
  while (end > begin && tokens[end - 1] == Token::pad()) --end;
  if (end > begin && tokens[end - 1] == Token::eos()) --end;
  if (begin < end && tokens[begin] == Token::bos()) ++begin;

  auto malformed = [](std::size_t index, const std::string& why) {
    return Error(ErrorCode::MalformedSequence, "token " + std::to_string(index) + ": " + why);
  };

  std::vector<Move> moves;
  Board board = Board::initial();
  std::size_t i = begin;
  while (i < end) {
    if (tokens[i].token_class() == TokenClass::PieceType) {
      ++i;
      if (i >= end) throw malformed(i - 1, "piece-type token without a move");
    }
    auto from = tokens[i].as_square();
    if (!from) throw malformed(i, "expected a from-square, got '" + std::string(tokens[i].text()) + "'");
    if (i + 1 >= end) throw malformed(i, "dangling from-square");
    auto to = tokens[i + 1].as_square();
    if (!to) throw malformed(i + 1, "expected a to-square, got '" + std::string(tokens[i + 1].text()) + "'");
    Move m{*from, *to, std::nullopt};
    i += 2;
    if (i < end && tokens[i].token_class() == TokenClass::Promotion) {
      m.promotion = tokens[i].as_promotion();
      ++i;
    }
    if (m.from == m.to) throw malformed(i, "move does not change square");
    try {
      board = chess::apply_move(board, m);
    } catch (const Error&) {
      throw malformed(i, "move " + uci_print(m) + " does not replay legally");
    }
    moves.push_back(m);
  }
  return moves;
}

std::string token_file_line(const TokenSequence& sequence) {
  std::string out = "BOS";
  for (Token t : sequence.tokens) {
    out.push_back(' ');
    out += t.text();
  }
  out += " EOS";
  return out;
}

}  // namespace chessprobe::notation
