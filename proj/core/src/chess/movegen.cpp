#include "chessprobe/chess/movegen.hpp"

#include <bit>
#include <cstdlib>
#include <string>

#include "attacks.hpp"
#include "chessprobe/error.hpp"

namespace chessprobe::chess {

namespace {

constexpr std::array<PieceType, 4> kPromotions = {PieceType::Queen, PieceType::Rook,
                                                  PieceType::Bishop, PieceType::Knight};

template <typename Fn>
void for_each_bit(Bitboard bb, Fn&& fn) {
  while (bb) {
    fn(Square::from_index(std::countr_zero(bb)));
    bb &= bb - 1;
  }
}

Bitboard piece_attacks(PieceType type, Color color, Square from, Bitboard occupied) {
  const auto& t = attacks::tables();
  switch (type) {
    case PieceType::Pawn: return t.pawn[index_of(color)][from.index()];
    case PieceType::Knight: return t.knight[from.index()];
    case PieceType::Bishop: return attacks::bishop_attacks(from.index(), occupied);
    case PieceType::Rook: return attacks::rook_attacks(from.index(), occupied);
    case PieceType::Queen: return attacks::queen_attacks(from.index(), occupied);
    case PieceType::King: return t.king[from.index()];
  }
  return 0;
}

void add_pawn_move(MoveList& out, Square from, Square to) {
  if (to.rank() == 0 || to.rank() == 7) {
    for (PieceType promo : kPromotions) out.push_back(Move{from, to, promo});
  } else {
    out.push_back(Move{from, to, std::nullopt});
  }
}

void generate_pawn_moves(const Board& b, Square from, MoveList& out) {
  const Color us = b.side_to_move();
  const int forward = us == Color::White ? 1 : -1;
  const int home_rank = us == Color::White ? 1 : 6;
  const Bitboard occupied = b.occupancy();

  const Square one(from.file(), from.rank() + forward);
  if (!(occupied & one.bit())) {
    add_pawn_move(out, from, one);
    if (from.rank() == home_rank) {
      const Square two(from.file(), from.rank() + 2 * forward);
      if (!(occupied & two.bit())) out.push_back(Move{from, two, std::nullopt});
    }
  }
  Bitboard targets = attacks::tables().pawn[index_of(us)][from.index()];
  Bitboard capturable = b.pieces(~us);
  if (auto ep = b.en_passant_target()) capturable |= ep->bit();
  for_each_bit(targets & capturable, [&](Square to) { add_pawn_move(out, from, to); });
}

void generate_castling(const Board& b, MoveList& out) {
  const Color us = b.side_to_move();
  const int rank = us == Color::White ? 0 : 7;
  const Square king_from(4, rank);
  const Bitboard occupied = b.occupancy();
  if (is_square_attacked(b, king_from, ~us)) return;

  if (b.can_castle(us, CastleSide::King)) {
    const Square f(5, rank), g(6, rank);
    if (!(occupied & (f.bit() | g.bit())) && !is_square_attacked(b, f, ~us) &&
        !is_square_attacked(b, g, ~us)) {
      out.push_back(Move{king_from, g, std::nullopt});
    }
  }
  if (b.can_castle(us, CastleSide::Queen)) {
    const Square d(3, rank), c(2, rank), bsq(1, rank);
    if (!(occupied & (d.bit() | c.bit() | bsq.bit())) && !is_square_attacked(b, d, ~us) &&
        !is_square_attacked(b, c, ~us)) {
      out.push_back(Move{king_from, c, std::nullopt});
    }
  }
}

}  // namespace

bool is_square_attacked(const Board& b, Square square, Color by) {
  const auto& t = attacks::tables();
  const int sq = square.index();
  const Bitboard occupied = b.occupancy();
  if (t.knight[sq] & b.pieces(by, PieceType::Knight)) return true;
  if (t.king[sq] & b.pieces(by, PieceType::King)) return true;
  // A pawn of `by` attacks `square` iff a pawn of the other color on `square` would attack it.
  if (t.pawn[index_of(~by)][sq] & b.pieces(by, PieceType::Pawn)) return true;
  const Bitboard diagonal = b.pieces(by, PieceType::Bishop) | b.pieces(by, PieceType::Queen);
  if (diagonal && (attacks::bishop_attacks(sq, occupied) & diagonal)) return true;
  const Bitboard straight = b.pieces(by, PieceType::Rook) | b.pieces(by, PieceType::Queen);
  if (straight && (attacks::rook_attacks(sq, occupied) & straight)) return true;
  return false;
}

bool is_in_check(const Board& b, Color c) {
  return is_square_attacked(b, b.king_square(c), ~c);
}

MoveList pseudo_legal_moves(const Board& b) {
  MoveList out;
  out.reserve(64);
  const Color us = b.side_to_move();
  const Bitboard own = b.pieces(us);
  const Bitboard occupied = b.occupancy();
  for_each_bit(own, [&](Square from) {
    const PieceType type = b.piece_at(from)->type;
    if (type == PieceType::Pawn) {
      generate_pawn_moves(b, from, out);
      return;
    }
    for_each_bit(piece_attacks(type, us, from, occupied) & ~own,
                 [&](Square to) { out.push_back(Move{from, to, std::nullopt}); });
  });
  generate_castling(b, out);
  return out;
}

MoveList legal_moves(const Board& b) {
  MoveList pseudo = pseudo_legal_moves(b);
  MoveList out;
  out.reserve(pseudo.size());
  const Color us = b.side_to_move();
  for (const Move& m : pseudo) {
    if (!is_in_check(apply_pseudo_legal(b, m), us)) out.push_back(m);
  }
  return out;
}

SquareSet legal_destinations(const Board& b, Square from) {
  auto piece = b.piece_at(from);
  if (!piece || piece->color != b.side_to_move()) {
    throw Error(ErrorCode::EmptyOrOpponentSquare,
                from.name() + " does not hold a piece of the side to move");
  }
  SquareSet out;
  for (const Move& m : legal_moves(b)) {
    if (m.from == from) out.insert(m.to);
  }
  return out;
}

SquareSet movable_squares(const Board& b) {
  SquareSet out;
  for (const Move& m : legal_moves(b)) out.insert(m.from);
  return out;
}

SquareSet movable_squares_of_type(const Board& b, PieceType type) {
  return SquareSet(movable_squares(b).mask() & b.pieces(b.side_to_move(), type));
}

Board apply_pseudo_legal(const Board& b, const Move& m) {
  auto moving = b.piece_at(m.from);
  if (!moving) throw Error(ErrorCode::InvalidArgument, "no piece on " + m.from.name());
  const Piece piece = *moving;
  const Color us = piece.color;
  Board next = b;
  next.en_passant_.reset();

  if (piece.type == PieceType::Pawn && b.en_passant_target() == m.to && m.from.file() != m.to.file() &&
      !b.piece_at(m.to)) {
    next.remove(Square(m.to.file(), m.from.rank()));
  }
  const int home_rank = us == Color::White ? 0 : 7;
  if (piece.type == PieceType::King && m.from == Square(4, home_rank) && m.to.rank() == home_rank &&
      std::abs(m.to.file() - m.from.file()) == 2) {
    const bool king_side = m.to.file() == 6;
    const Square rook_from(king_side ? 7 : 0, home_rank);
    const Square rook_to(king_side ? 5 : 3, home_rank);
    if (b.piece_at(rook_from) == Piece{us, PieceType::Rook}) {
      next.remove(rook_from);
      next.put(rook_to, Piece{us, PieceType::Rook});
    }
  }

  next.remove(m.from);
  PieceType placed = piece.type;
  if (piece.type == PieceType::Pawn && (m.to.rank() == 0 || m.to.rank() == 7)) {
    placed = m.promotion.value_or(PieceType::Queen);
  }
  next.put(m.to, Piece{us, placed});

  if (piece.type == PieceType::Pawn && std::abs(m.to.rank() - m.from.rank()) == 2) {
    next.en_passant_ = Square(m.from.file(), (m.from.rank() + m.to.rank()) / 2);
  }

  if (piece.type == PieceType::King) {
    next.castling_ &= static_cast<std::uint8_t>(
        ~(Board::castle_bit(us, CastleSide::King) | Board::castle_bit(us, CastleSide::Queen)));
  }
  constexpr struct {
    Square square;
    Color color;
    CastleSide side;
  } kRookHomes[] = {{squares::h1, Color::White, CastleSide::King},
                    {squares::a1, Color::White, CastleSide::Queen},
                    {squares::h8, Color::Black, CastleSide::King},
                    {squares::a8, Color::Black, CastleSide::Queen}};
  for (const auto& home : kRookHomes) {
    if (m.from == home.square || m.to == home.square) {
      next.castling_ &= static_cast<std::uint8_t>(~Board::castle_bit(home.color, home.side));
    }
  }

  next.side_to_move_ = ~b.side_to_move();
  return next;
}

Board apply_move(const Board& b, const Move& m) {
  for (const Move& legal : legal_moves(b)) {
    if (legal == m) return apply_pseudo_legal(b, m);
  }
  std::string text = m.from.name() + m.to.name();
  if (m.promotion) text.push_back(static_cast<char>(piece_letter(*m.promotion) - 'A' + 'a'));
  throw Error(ErrorCode::IllegalMove, text + " is not legal in this position");
}

std::uint64_t perft(const Board& b, int depth) {
  if (depth <= 0) return 1;
  MoveList moves = legal_moves(b);
  if (depth == 1) return moves.size();
  std::uint64_t total = 0;
  for (const Move& m : moves) total += perft(apply_pseudo_legal(b, m), depth - 1);
  return total;
}

}  // namespace chessprobe::chess
