#include "chessprobe/chess/geometry.hpp"

#include <algorithm>
#include <cstdlib>

namespace chessprobe::chess {

bool piecetype_geometry_reach(PieceType type, Color color, Square from, Square to) {
  if (from == to) return false;
  const int df = to.file() - from.file();
  const int dr = to.rank() - from.rank();
  const int adf = std::abs(df);
  const int adr = std::abs(dr);
  switch (type) {
    case PieceType::Pawn: {
      const int forward = color == Color::White ? 1 : -1;
      const int home_rank = color == Color::White ? 1 : 6;
      if (dr == forward && adf <= 1) return true;
      return df == 0 && dr == 2 * forward && from.rank() == home_rank;
    }
    case PieceType::Knight: return (adf == 1 && adr == 2) || (adf == 2 && adr == 1);
    case PieceType::Bishop: return adf == adr;
    case PieceType::Rook: return df == 0 || dr == 0;
    case PieceType::Queen: return adf == adr || df == 0 || dr == 0;
    case PieceType::King: {
      if (adf <= 1 && adr <= 1) return true;
      const Square home = color == Color::White ? squares::e1 : squares::e8;
      return from == home && dr == 0 && adf == 2;
    }
  }
  return false;
}

bool any_piecetype_reach(Square from, Square to) {
  for (PieceType t : kAllPieceTypes) {
    for (Color c : {Color::White, Color::Black}) {
      if (piecetype_geometry_reach(t, c, from, to)) return true;
    }
  }
  return false;
}

int king_distance(Square from, Square to) {
  return std::max(std::abs(to.file() - from.file()), std::abs(to.rank() - from.rank()));
}

}  // namespace chessprobe::chess
