#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "chessprobe/chess/types.hpp"

namespace chessprobe::chess {

using Bitboard = std::uint64_t;

enum class CastleSide : std::uint8_t { King, Queen };

// Full chess position without move clocks; draw rules never affect legality here.
class Board {
 public:
  /// Standard starting position, White to move, all castling rights.
  static Board initial();

  std::optional<Piece> piece_at(Square s) const;
  Color side_to_move() const { return side_to_move_; }
  bool can_castle(Color c, CastleSide side) const { return (castling_ & castle_bit(c, side)) != 0; }
  std::optional<Square> en_passant_target() const { return en_passant_; }

  Bitboard occupancy() const { return by_color_[0] | by_color_[1]; }
  Bitboard pieces(Color c) const { return by_color_[index_of(c)]; }
  Bitboard pieces(PieceType t) const { return by_type_[index_of(t)]; }
  Bitboard pieces(Color c, PieceType t) const { return pieces(c) & pieces(t); }
  Square king_square(Color c) const;
  int piece_count() const;

  /// Eight-line ASCII diagram (rank 8 first), uppercase for White.
  std::string to_ascii() const;

  friend bool operator==(const Board&, const Board&) = default;

 private:
  friend class BoardBuilder;
  friend Board apply_pseudo_legal(const Board&, const Move&);

  static constexpr std::uint8_t castle_bit(Color c, CastleSide side) {
    return static_cast<std::uint8_t>(1u << (index_of(c) * 2 + static_cast<int>(side)));
  }

  void put(Square s, Piece p);
  void remove(Square s);

  // 0 = empty, otherwise 1 + color * 6 + type.
  std::array<std::uint8_t, 64> mailbox_{};
  std::array<Bitboard, 2> by_color_{};
  std::array<Bitboard, 6> by_type_{};
  Color side_to_move_ = Color::White;
  std::uint8_t castling_ = 0;
  std::optional<Square> en_passant_;
};

// Assembles arbitrary positions (test fixtures, figure reconstructions) and
// validates the board invariants on build().
class BoardBuilder {
 public:
  BoardBuilder() = default;
  explicit BoardBuilder(const Board& start) : board_(start) {}

  BoardBuilder& place(Square s, Piece p);
  BoardBuilder& clear(Square s);
  BoardBuilder& side_to_move(Color c);
  BoardBuilder& castling(Color c, CastleSide side, bool allowed);
  BoardBuilder& en_passant(std::optional<Square> target);

  /// Throws Error(InvalidBoard) when a king is missing or duplicated, a pawn sits
  /// on a back rank, a castling right lacks its king/rook, or the en-passant
  /// target is inconsistent with a double push by the side not to move.
  Board build() const;

 private:
  Board board_;
};

}  // namespace chessprobe::chess
