#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "chessprobe/chess/board.hpp"
#include "chessprobe/chess/types.hpp"

namespace chessprobe::evalkit {

// Legal, then the four illegal categories in precedence order.
enum class ErrorCategory { Legal, Unreachable, Syntax, PathObstruction, PseudoLegal };

inline constexpr std::array<ErrorCategory, 4> kIllegalCategories = {
    ErrorCategory::Unreachable, ErrorCategory::Syntax, ErrorCategory::PathObstruction, ErrorCategory::PseudoLegal};

std::string_view to_string(ErrorCategory category);

enum class PseudoLegalSubcat { CheckKing, CheckOther, NoCheckKing, NoCheckOther };

inline constexpr std::array<PseudoLegalSubcat, 4> kPseudoLegalSubcats = {
    PseudoLegalSubcat::CheckKing, PseudoLegalSubcat::CheckOther, PseudoLegalSubcat::NoCheckKing,
    PseudoLegalSubcat::NoCheckOther};

/// "Check+King", "Check+Other", "NoCheck+King", "NoCheck+Other".
std::string_view to_string(PseudoLegalSubcat subcat);

/// Category of the illegal move from -> to, where `from` holds a piece of the
/// side to move. The first matching rule wins:
///   Unreachable      no piece type of either color reaches `to` from `from`
///   Syntax           the piece standing on `from` cannot reach `to`
///   PathObstruction  own piece on `to`, occupied slider path, blocked pawn
///                    push, pawn capture with nothing to take, or a castling
///                    hop without the right, without empty squares, or through
///                    an attacked square while the destination is safe
///   PseudoLegal      executable, but the mover's king ends in check
/// Throws Error(NotIllegal) when the move is legal and Error(InvalidArgument)
/// when `from` does not hold a piece of the side to move.
ErrorCategory classify_illegal_end(const chess::Board& board, chess::Square from, chess::Square to);

/// Quadrant of a PseudoLegal move: was the mover in check, and is the king moving.
PseudoLegalSubcat subclassify_pseudo_legal(const chess::Board& board, chess::Square from, chess::Square to);

}  // namespace chessprobe::evalkit
