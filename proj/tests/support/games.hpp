#pragma once

#include <string_view>
#include <vector>

#include "chessprobe/chess/board.hpp"
#include "chessprobe/chess/movegen.hpp"
#include "chessprobe/notation/moves.hpp"
#include "chessprobe/random.hpp"

namespace testsupport {

using chessprobe::chess::Board;
using chessprobe::chess::Move;

inline Board play(std::string_view uci_moves) {
  Board b = Board::initial();
  for (const Move& m : chessprobe::notation::uci_split(uci_moves)) b = chessprobe::chess::apply_move(b, m);
  return b;
}

// The running example: 1. e4 e5 2. Nf3 Nc6 3. d4 h6, next move Bb5.
inline constexpr std::string_view kTasksPrefix = "e2e4 e7e5 g1f3 b8c6 d2d4 h7h6";

/// Uniformly random legal playout of at most `max_plies`, stopping early at mate or stalemate.
inline std::vector<Move> random_game(chessprobe::Rng& rng, int max_plies) {
  std::vector<Move> moves;
  Board b = Board::initial();
  for (int ply = 0; ply < max_plies; ++ply) {
    auto legal = chessprobe::chess::legal_moves(b);
    if (legal.empty()) break;
    const Move m = legal[rng.below(legal.size())];
    b = chessprobe::chess::apply_pseudo_legal(b, m);
    moves.push_back(m);
  }
  return moves;
}

/// Positions visited by random playouts, initial position included once per game.
inline std::vector<Board> random_positions(std::uint64_t seed, int count, int max_plies = 160) {
  chessprobe::Rng rng(seed);
  std::vector<Board> out;
  out.reserve(count);
  while (static_cast<int>(out.size()) < count) {
    Board b = Board::initial();
    out.push_back(b);
    for (int ply = 0; ply < max_plies && static_cast<int>(out.size()) < count; ++ply) {
      auto legal = chessprobe::chess::legal_moves(b);
      if (legal.empty()) break;
      b = chessprobe::chess::apply_pseudo_legal(b, legal[rng.below(legal.size())]);
      out.push_back(b);
    }
  }
  return out;
}

}  // namespace testsupport
