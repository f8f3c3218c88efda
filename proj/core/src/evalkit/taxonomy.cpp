#include "chessprobe/evalkit/taxonomy.hpp"

#include <cstdlib>

#include "chess/attacks.hpp"
#include "chessprobe/chess/geometry.hpp"
#include "chessprobe/chess/movegen.hpp"
#include "chessprobe/error.hpp"

namespace chessprobe::evalkit {

using chess::Board;
using chess::Color;
using chess::PieceType;
using chess::Square;

std::string_view to_string(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::Legal: return "Legal";
    case ErrorCategory::Unreachable: return "Unreachable";
    case ErrorCategory::Syntax: return "Syntax";
    case ErrorCategory::PathObstruction: return "PathObstruction";
    case ErrorCategory::PseudoLegal: return "PseudoLegal";
  }
  return "?";
}

std::string_view to_string(PseudoLegalSubcat subcat) {
  switch (subcat) {
    case PseudoLegalSubcat::CheckKing: return "Check+King";
    case PseudoLegalSubcat::CheckOther: return "Check+Other";
    case PseudoLegalSubcat::NoCheckKing: return "NoCheck+King";
    case PseudoLegalSubcat::NoCheckOther: return "NoCheck+Other";
  }
  return "?";
}

namespace {

chess::Piece mover_piece(const Board& b, Square from) {
  auto piece = b.piece_at(from);
  if (!piece || piece->color != b.side_to_move()) {
    throw Error(ErrorCode::InvalidArgument, from.name() + " holds no piece of the side to move");
  }
  return *piece;
}

bool castling_obstructed(const Board& b, Square from, Square to) {
  const Color us = b.side_to_move();
  const bool king_side = to.file() > from.file();
  const auto side = king_side ? chess::CastleSide::King : chess::CastleSide::Queen;
  if (!b.can_castle(us, side)) return true;
  const Square rook(king_side ? 7 : 0, from.rank());
  if (b.piece_at(rook) != chess::Piece{us, PieceType::Rook}) return true;
  if (b.occupancy() & chess::attacks::tables().between[from.index()][rook.index()]) return true;
  // Leaving or crossing an attacked square is an obstruction only when the
  // king would land safely; otherwise the move is pseudo-legal.
  const Square transit((from.file() + to.file()) / 2, from.rank());
  const bool crossing_attacked =
      chess::is_square_attacked(b, from, ~us) || chess::is_square_attacked(b, transit, ~us);
  return crossing_attacked && !chess::is_square_attacked(b, to, ~us);
}

bool path_obstructed(const Board& b, chess::Piece piece, Square from, Square to) {
  const Color us = piece.color;
  const auto target = b.piece_at(to);
  if (target && target->color == us) return true;
  const chess::Bitboard occupied = b.occupancy();
  switch (piece.type) {
    case PieceType::Bishop:
    case PieceType::Rook:
    case PieceType::Queen: return (occupied & chess::attacks::tables().between[from.index()][to.index()]) != 0;
    case PieceType::Knight: return false;
    case PieceType::King: return std::abs(to.file() - from.file()) == 2 && castling_obstructed(b, from, to);
    case PieceType::Pawn:
      if (from.file() == to.file()) {
        if (target) return true;
        return std::abs(to.rank() - from.rank()) == 2 && b.piece_at(Square(from.file(), (from.rank() + to.rank()) / 2));
      }
      return !target && b.en_passant_target() != to;
  }
  return false;
}

}  // namespace

ErrorCategory classify_illegal_end(const Board& b, Square from, Square to) {
  const chess::Piece piece = mover_piece(b, from);
  if (from != to && chess::legal_destinations(b, from).contains(to)) {
    throw Error(ErrorCode::NotIllegal, from.name() + to.name() + " is legal");
  }
  if (!chess::any_piecetype_reach(from, to)) return ErrorCategory::Unreachable;
  if (!chess::piecetype_geometry_reach(piece.type, piece.color, from, to)) return ErrorCategory::Syntax;
  if (path_obstructed(b, piece, from, to)) return ErrorCategory::PathObstruction;
  return ErrorCategory::PseudoLegal;
}

PseudoLegalSubcat subclassify_pseudo_legal(const Board& b, Square from, Square /*to*/) {
  const chess::Piece piece = mover_piece(b, from);
  const bool in_check = chess::is_in_check(b, piece.color);
  const bool king = piece.type == PieceType::King;
  if (in_check) return king ? PseudoLegalSubcat::CheckKing : PseudoLegalSubcat::CheckOther;
  return king ? PseudoLegalSubcat::NoCheckKing : PseudoLegalSubcat::NoCheckOther;
}

}  // namespace chessprobe::evalkit
