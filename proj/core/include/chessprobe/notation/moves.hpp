#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chessprobe/chess/board.hpp"
#include "chessprobe/chess/types.hpp"

namespace chessprobe::notation {

/// "f1b5", "e7e8q"; castling is printed as the king's two-square move.
std::string uci_print(const chess::Move& move);

/// Inverse of uci_print. Throws Error(MalformedUci) on bad length, characters,
/// or from == to.
chess::Move uci_parse(std::string_view text);

/// Space-separated UCI moves.
std::string uci_join(std::span<const chess::Move> moves);

/// Parses a space-separated UCI move list (no legality check).
std::vector<chess::Move> uci_split(std::string_view text);

/// Resolves a SAN move token against the legal moves of `board`.
///
/// Accepts piece letter, file/rank/square disambiguation, optional 'x',
/// promotion as "=Q" or bare "Q", castling as O-O / O-O-O (or with zeros), and
/// strips trailing annotations (+, #, !, ?). Throws Error(NoLegalMatch) when no
/// legal move matches (including unparseable text) and Error(AmbiguousSan)
/// when more than one does.
chess::Move san_parse(const chess::Board& board, std::string_view san);

}  // namespace chessprobe::notation
