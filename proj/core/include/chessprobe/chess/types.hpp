#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <iterator>
#include <optional>
#include <string>
#include <string_view>

namespace chessprobe::chess {

enum class Color : std::uint8_t { White, Black };

constexpr Color operator~(Color c) { return c == Color::White ? Color::Black : Color::White; }

constexpr int index_of(Color c) { return static_cast<int>(c); }

enum class PieceType : std::uint8_t { Pawn, Knight, Bishop, Rook, Queen, King };

inline constexpr std::array<PieceType, 6> kAllPieceTypes = {
    PieceType::Pawn, PieceType::Knight, PieceType::Bishop,
    PieceType::Rook, PieceType::Queen,  PieceType::King};

constexpr int index_of(PieceType t) { return static_cast<int>(t); }

/// Uppercase letter used by the vocabulary and SAN: P, N, B, R, Q, K.
constexpr char piece_letter(PieceType t) {
  constexpr std::array<char, 6> kLetters = {'P', 'N', 'B', 'R', 'Q', 'K'};
  return kLetters[index_of(t)];
}

/// Accepts uppercase letters only; lowercase letters are promotion tokens, not piece types.
std::optional<PieceType> piece_type_from_letter(char c);

struct Piece {
  Color color;
  PieceType type;

  friend constexpr bool operator==(Piece, Piece) = default;
};

class Square {
 public:
  constexpr Square() = default;
  constexpr Square(int file, int rank) : index_(static_cast<std::uint8_t>(rank * 8 + file)) {}

  static constexpr Square from_index(int index) { return Square(index % 8, index / 8); }

  /// Parses "a1".."h8"; anything else yields nullopt.
  static std::optional<Square> parse(std::string_view name);

  constexpr int file() const { return index_ % 8; }
  constexpr int rank() const { return index_ / 8; }
  constexpr int index() const { return index_; }
  constexpr std::uint64_t bit() const { return std::uint64_t{1} << index_; }

  std::string name() const;

  friend constexpr auto operator<=>(Square, Square) = default;

 private:
  std::uint8_t index_ = 0;
};

namespace squares {
inline constexpr Square a1{0, 0}, b1{1, 0}, c1{2, 0}, d1{3, 0}, e1{4, 0}, f1{5, 0}, g1{6, 0}, h1{7, 0};
inline constexpr Square a8{0, 7}, b8{1, 7}, c8{2, 7}, d8{3, 7}, e8{4, 7}, f8{5, 7}, g8{6, 7}, h8{7, 7};
}  // namespace squares

/// A set of squares backed by a 64-bit mask; iterates in index order (a1, b1, ..., h8).
class SquareSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Square;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = Square;

    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}

    Square operator*() const { return Square::from_index(std::countr_zero(rest_)); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator prev = *this;
      ++*this;
      return prev;
    }
    friend bool operator==(iterator, iterator) = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr SquareSet() = default;
  constexpr explicit SquareSet(std::uint64_t mask) : mask_(mask) {}
  SquareSet(std::initializer_list<Square> squares) {
    for (Square s : squares) insert(s);
  }

  constexpr void insert(Square s) { mask_ |= s.bit(); }
  constexpr void erase(Square s) { mask_ &= ~s.bit(); }
  constexpr bool contains(Square s) const { return (mask_ & s.bit()) != 0; }
  constexpr bool empty() const { return mask_ == 0; }
  int size() const { return std::popcount(mask_); }
  constexpr std::uint64_t mask() const { return mask_; }

  iterator begin() const { return iterator(mask_); }
  iterator end() const { return iterator(0); }

  /// Comma-separated square names in index order, e.g. "c1,f1".
  std::string to_string() const;

  friend constexpr bool operator==(SquareSet, SquareSet) = default;

 private:
  std::uint64_t mask_ = 0;
};

struct Move {
  Square from;
  Square to;
  std::optional<PieceType> promotion;

  friend auto operator<=>(const Move&, const Move&) = default;
  friend bool operator==(const Move&, const Move&) = default;
};

}  // namespace chessprobe::chess
