#include "chessprobe/chess/board.hpp"

#include <bit>

#include "chessprobe/error.hpp"

namespace chessprobe::chess {

namespace {

constexpr std::uint8_t encode(Piece p) {
  return static_cast<std::uint8_t>(1 + index_of(p.color) * 6 + index_of(p.type));
}

constexpr Piece decode(std::uint8_t code) {
  return Piece{static_cast<Color>((code - 1) / 6), static_cast<PieceType>((code - 1) % 6)};
}

constexpr Square kRookHome[2][2] = {{squares::h1, squares::a1}, {squares::h8, squares::a8}};

}  // namespace

Board Board::initial() {
  Board b;
  constexpr std::array<PieceType, 8> kBackRank = {
      PieceType::Rook, PieceType::Knight, PieceType::Bishop, PieceType::Queen,
      PieceType::King, PieceType::Bishop, PieceType::Knight, PieceType::Rook};
  for (int file = 0; file < 8; ++file) {
    b.put(Square(file, 0), Piece{Color::White, kBackRank[file]});
    b.put(Square(file, 1), Piece{Color::White, PieceType::Pawn});
    b.put(Square(file, 6), Piece{Color::Black, PieceType::Pawn});
    b.put(Square(file, 7), Piece{Color::Black, kBackRank[file]});
  }
  b.castling_ = 0x0F;
  return b;
}

std::optional<Piece> Board::piece_at(Square s) const {
  std::uint8_t code = mailbox_[s.index()];
  if (code == 0) return std::nullopt;
  return decode(code);
}

Square Board::king_square(Color c) const {
  Bitboard kings = pieces(c, PieceType::King);
  return Square::from_index(std::countr_zero(kings));
}

int Board::piece_count() const { return std::popcount(occupancy()); }

void Board::put(Square s, Piece p) {
  remove(s);
  mailbox_[s.index()] = encode(p);
  by_color_[index_of(p.color)] |= s.bit();
  by_type_[index_of(p.type)] |= s.bit();
}

void Board::remove(Square s) {
  std::uint8_t code = mailbox_[s.index()];
  if (code == 0) return;
  Piece p = decode(code);
  mailbox_[s.index()] = 0;
  by_color_[index_of(p.color)] &= ~s.bit();
  by_type_[index_of(p.type)] &= ~s.bit();
}

std::string Board::to_ascii() const {
  std::string out;
  for (int rank = 7; rank >= 0; --rank) {
    for (int file = 0; file < 8; ++file) {
      auto p = piece_at(Square(file, rank));
      char c = '.';
      if (p) {
        c = piece_letter(p->type);
        if (p->color == Color::Black) c = static_cast<char>(c - 'A' + 'a');
      }
      out.push_back(c);
    }
    out.push_back('\n');
  }
  return out;
}

BoardBuilder& BoardBuilder::place(Square s, Piece p) {
  board_.put(s, p);
  return *this;
}

BoardBuilder& BoardBuilder::clear(Square s) {
  board_.remove(s);
  return *this;
}

BoardBuilder& BoardBuilder::side_to_move(Color c) {
  board_.side_to_move_ = c;
  return *this;
}

BoardBuilder& BoardBuilder::castling(Color c, CastleSide side, bool allowed) {
  auto bit = Board::castle_bit(c, side);
  if (allowed) {
    board_.castling_ |= bit;
  } else {
    board_.castling_ &= static_cast<std::uint8_t>(~bit);
  }
  return *this;
}

BoardBuilder& BoardBuilder::en_passant(std::optional<Square> target) {
  board_.en_passant_ = target;
  return *this;
}

Board BoardBuilder::build() const {
  const Board& b = board_;
  for (Color c : {Color::White, Color::Black}) {
    if (std::popcount(b.pieces(c, PieceType::King)) != 1) {
      throw Error(ErrorCode::InvalidBoard, "each side needs exactly one king");
    }
  }
  constexpr Bitboard kBackRanks = 0xFF000000000000FFULL;
  if (b.pieces(PieceType::Pawn) & kBackRanks) {
    throw Error(ErrorCode::InvalidBoard, "pawn on first or last rank");
  }
  for (Color c : {Color::White, Color::Black}) {
    const Square king_home = c == Color::White ? squares::e1 : squares::e8;
    for (CastleSide side : {CastleSide::King, CastleSide::Queen}) {
      if (!b.can_castle(c, side)) continue;
      const Square rook_home = kRookHome[index_of(c)][static_cast<int>(side)];
      if (b.piece_at(king_home) != Piece{c, PieceType::King} ||
          b.piece_at(rook_home) != Piece{c, PieceType::Rook}) {
        throw Error(ErrorCode::InvalidBoard, "castling right without king and rook on home squares");
      }
    }
  }
  if (b.en_passant_) {
    // The side that just moved is the opponent of the side to move.
    const Color pusher = ~b.side_to_move_;
    const Square target = *b.en_passant_;
    const int expected_rank = pusher == Color::White ? 2 : 5;
    const int step = pusher == Color::White ? 1 : -1;
    if (target.rank() != expected_rank || b.piece_at(target) ||
        b.piece_at(Square(target.file(), target.rank() - step)) ||
        b.piece_at(Square(target.file(), target.rank() + step)) != Piece{pusher, PieceType::Pawn}) {
      throw Error(ErrorCode::InvalidBoard, "en-passant target inconsistent with a double push");
    }
  }
  return b;
}

}  // namespace chessprobe::chess
