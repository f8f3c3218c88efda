#include "chessprobe/chess/types.hpp"

namespace chessprobe::chess {

std::optional<PieceType> piece_type_from_letter(char c) {
  switch (c) {
    case 'P': return PieceType::Pawn;
    case 'N': return PieceType::Knight;
    case 'B': return PieceType::Bishop;
    case 'R': return PieceType::Rook;
    case 'Q': return PieceType::Queen;
    case 'K': return PieceType::King;
    default: return std::nullopt;
  }
}

std::optional<Square> Square::parse(std::string_view name) {
  if (name.size() != 2) return std::nullopt;
  const char f = name[0];
  const char r = name[1];
  if (f < 'a' || f > 'h' || r < '1' || r > '8') return std::nullopt;
  return Square(f - 'a', r - '1');
}

std::string Square::name() const {
  return {static_cast<char>('a' + file()), static_cast<char>('1' + rank())};
}

std::string SquareSet::to_string() const {
  std::string out;
  for (Square s : *this) {
    if (!out.empty()) out.push_back(',');
    out += s.name();
  }
  return out;
}

}  // namespace chessprobe::chess
