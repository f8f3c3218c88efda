#pragma once

#include <cstdint>
#include <vector>

#include "chessprobe/chess/board.hpp"
#include "chessprobe/chess/types.hpp"

namespace chessprobe::chess {

using MoveList = std::vector<Move>;

/// All FIDE-legal moves for the side to move. Promotions appear once per
/// promotion piece (Q, R, B, N). Empty on checkmate and stalemate.
MoveList legal_moves(const Board& board);

/// Moves obeying piece movement rules, castling preconditions included, that may
/// still leave the mover's king in check.
MoveList pseudo_legal_moves(const Board& board);

/// Destinations of the legal moves starting at `from`, promotion variants
/// collapsed. Throws Error(EmptyOrOpponentSquare) unless `from` holds a piece of
/// the side to move.
SquareSet legal_destinations(const Board& board, Square from);

/// Squares of the side-to-move's pieces of type `type` having at least one legal move.
SquareSet movable_squares_of_type(const Board& board, PieceType type);

/// Starting squares of every legal move of the side to move.
SquareSet movable_squares(const Board& board);

/// Throws Error(IllegalMove) if `move` is not in legal_moves(board).
Board apply_move(const Board& board, const Move& move);

/// Executes a move without verifying that it is legal or even pseudo-legal:
/// the piece on `from` is transferred to `to`, with the usual side effects for
/// castling (king moving two files from its home square), en passant (pawn
/// capturing onto the en-passant target) and promotion. Used to examine the
/// consequences of an illegal prediction.
Board apply_pseudo_legal(const Board& board, const Move& move);

bool is_square_attacked(const Board& board, Square square, Color by);

/// True iff the king of color `c` is attacked by an opposing piece.
bool is_in_check(const Board& board, Color c);

/// Number of legal move sequences of exactly `depth` plies.
std::uint64_t perft(const Board& board, int depth);

}  // namespace chessprobe::chess
