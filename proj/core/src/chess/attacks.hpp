#pragma once

#include <array>
#include <bit>
#include <cstdint>

#include "chessprobe/chess/board.hpp"

namespace chessprobe::chess::attacks {

// Precomputed leaper tables and per-direction rays. Sliding attacks are
// resolved by cutting each ray at its first blocker.

enum Direction : int { North, South, East, West, NorthEast, NorthWest, SouthEast, SouthWest };

struct Tables {
  std::array<Bitboard, 64> knight{};
  std::array<Bitboard, 64> king{};
  std::array<std::array<Bitboard, 64>, 2> pawn{};  // capture targets per color
  std::array<std::array<Bitboard, 64>, 8> ray{};
  std::array<std::array<Bitboard, 64>, 64> between{};  // strictly between two aligned squares
};

const Tables& tables();

inline constexpr bool is_positive(Direction d) {
  return d == North || d == East || d == NorthEast || d == NorthWest;
}

inline Bitboard ray_attacks(Direction d, int square, Bitboard occupied) {
  const Tables& t = tables();
  Bitboard ray = t.ray[d][square];
  Bitboard blockers = ray & occupied;
  if (blockers == 0) return ray;
  int first = is_positive(d) ? std::countr_zero(blockers) : 63 - std::countl_zero(blockers);
  return ray ^ t.ray[d][first];
}

inline Bitboard rook_attacks(int square, Bitboard occupied) {
  return ray_attacks(North, square, occupied) | ray_attacks(South, square, occupied) |
         ray_attacks(East, square, occupied) | ray_attacks(West, square, occupied);
}

inline Bitboard bishop_attacks(int square, Bitboard occupied) {
  return ray_attacks(NorthEast, square, occupied) | ray_attacks(NorthWest, square, occupied) |
         ray_attacks(SouthEast, square, occupied) | ray_attacks(SouthWest, square, occupied);
}

inline Bitboard queen_attacks(int square, Bitboard occupied) {
  return rook_attacks(square, occupied) | bishop_attacks(square, occupied);
}

}  // namespace chessprobe::chess::attacks
