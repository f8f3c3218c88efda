#pragma once

#include "chessprobe/chess/types.hpp"

namespace chessprobe::chess {

// Board-agnostic reachability, used by the illegal-move taxonomy. The reading
// is deliberately permissive: pawns may single push, double push from their
// home rank, or step diagonally forward; kings may step once or make the
// two-file castling hop from their home square.

/// Whether a piece of type `type` and color `color` could travel from -> to on
/// an otherwise empty board. Always false when from == to.
bool piecetype_geometry_reach(PieceType type, Color color, Square from, Square to);

/// Whether some (piece type, color) pair can travel from -> to.
bool any_piecetype_reach(Square from, Square to);

/// Chebyshev distance: the number of king steps between two squares.
int king_distance(Square from, Square to);

}  // namespace chessprobe::chess
