#include "chessprobe/notation/moves.hpp"

#include <cctype>

#include "chessprobe/chess/movegen.hpp"
#include "chessprobe/error.hpp"

namespace chessprobe::notation {

using chess::Move;
using chess::PieceType;
using chess::Square;

namespace {

char promotion_letter(PieceType t) { return static_cast<char>(chess::piece_letter(t) - 'A' + 'a'); }

std::optional<PieceType> promotion_from_letter(char c) {
  switch (std::tolower(static_cast<unsigned char>(c))) {
    case 'q': return PieceType::Queen;
    case 'r': return PieceType::Rook;
    case 'b': return PieceType::Bishop;
    case 'n': return PieceType::Knight;
    default: return std::nullopt;
  }
}

[[noreturn]] void no_match(std::string_view san, const char* why) {
  throw Error(ErrorCode::NoLegalMatch, "'" + std::string(san) + "': " + why);
}

}  // namespace

std::string uci_print(const Move& move) {
  std::string out = move.from.name() + move.to.name();
  if (move.promotion) out.push_back(promotion_letter(*move.promotion));
  return out;
}

Move uci_parse(std::string_view text) {
  if (text.size() != 4 && text.size() != 5) {
    throw Error(ErrorCode::MalformedUci, "'" + std::string(text) + "' has bad length");
  }
  auto from = Square::parse(text.substr(0, 2));
  auto to = Square::parse(text.substr(2, 2));
  if (!from || !to) throw Error(ErrorCode::MalformedUci, "'" + std::string(text) + "' has a bad square");
  if (*from == *to) throw Error(ErrorCode::MalformedUci, "'" + std::string(text) + "' does not move");
  Move move{*from, *to, std::nullopt};
  if (text.size() == 5) {
    if (!std::islower(static_cast<unsigned char>(text[4])) || !(move.promotion = promotion_from_letter(text[4]))) {
      throw Error(ErrorCode::MalformedUci, "'" + std::string(text) + "' has a bad promotion letter");
    }
  }
  return move;
}

std::string uci_join(std::span<const Move> moves) {
  std::string out;
  for (const Move& m : moves) {
    if (!out.empty()) out.push_back(' ');
    out += uci_print(m);
  }
  return out;
}

std::vector<Move> uci_split(std::string_view text) {
  std::vector<Move> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    if (end > pos) out.push_back(uci_parse(text.substr(pos, end - pos)));
    pos = end;
  }
  return out;
}

Move san_parse(const chess::Board& board, std::string_view san) {
  std::string_view body = san;
  while (!body.empty() && (body.back() == '+' || body.back() == '#' || body.back() == '!' || body.back() == '?')) {
    body.remove_suffix(1);
  }
  if (body.empty()) no_match(san, "empty move");

  const chess::MoveList legal = chess::legal_moves(board);
  const chess::Color us = board.side_to_move();

  if (body == "O-O" || body == "0-0" || body == "O-O-O" || body == "0-0-0") {
    const int rank = us == chess::Color::White ? 0 : 7;
    const Move castle{Square(4, rank), Square(body.size() == 3 ? 6 : 2, rank), std::nullopt};
    auto king = board.piece_at(castle.from);
    for (const Move& m : legal) {
      if (m == castle && king && king->type == PieceType::King) return m;
    }
    no_match(san, "castling is not legal");
  }

  PieceType type = PieceType::Pawn;
  if (auto t = chess::piece_type_from_letter(body.front()); t && *t != PieceType::Pawn) {
    type = *t;
    body.remove_prefix(1);
  }

  std::optional<PieceType> promotion;
  if (body.size() >= 2 && body[body.size() - 2] == '=') {
    promotion = promotion_from_letter(body.back());
    if (!promotion) no_match(san, "bad promotion piece");
    body.remove_suffix(2);
  } else if (type == PieceType::Pawn && body.size() >= 3 &&
             std::isdigit(static_cast<unsigned char>(body[body.size() - 2])) &&
             std::isupper(static_cast<unsigned char>(body.back()))) {
    promotion = promotion_from_letter(body.back());
    if (!promotion) no_match(san, "bad promotion piece");
    body.remove_suffix(1);
  }

  if (body.size() < 2) no_match(san, "missing destination square");
  auto to = Square::parse(body.substr(body.size() - 2));
  if (!to) no_match(san, "bad destination square");
  body.remove_suffix(2);

  std::optional<int> from_file;
  std::optional<int> from_rank;
  for (char c : body) {
    if (c == 'x' || c == ':' || c == '-') continue;
    if (c >= 'a' && c <= 'h' && !from_file) {
      from_file = c - 'a';
    } else if (c >= '1' && c <= '8' && !from_rank) {
      from_rank = c - '1';
    } else {
      no_match(san, "unrecognized characters");
    }
  }
  if (type == PieceType::Pawn && !from_file) from_file = to->file();

  std::optional<Move> found;
  for (const Move& m : legal) {
    if (m.to != *to || m.promotion != promotion) continue;
    if (board.piece_at(m.from)->type != type) continue;
    if (from_file && m.from.file() != *from_file) continue;
    if (from_rank && m.from.rank() != *from_rank) continue;
    if (found) throw Error(ErrorCode::AmbiguousSan, "'" + std::string(san) + "' matches several legal moves");
    found = m;
  }
  if (!found) no_match(san, "no legal move matches");
  return *found;
}

}  // namespace chessprobe::notation
