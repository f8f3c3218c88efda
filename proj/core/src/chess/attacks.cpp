#include "attacks.hpp"

namespace chessprobe::chess::attacks {

namespace {

constexpr int kDelta[8][2] = {{0, 1}, {0, -1}, {1, 0}, {-1, 0}, {1, 1}, {-1, 1}, {1, -1}, {-1, -1}};

bool on_board(int file, int rank) { return file >= 0 && file < 8 && rank >= 0 && rank < 8; }

Bitboard bit(int file, int rank) { return Bitboard{1} << (rank * 8 + file); }

Tables build() {
  Tables t;
  constexpr int kKnight[8][2] = {{1, 2}, {2, 1}, {2, -1}, {1, -2}, {-1, -2}, {-2, -1}, {-2, 1}, {-1, 2}};
  for (int sq = 0; sq < 64; ++sq) {
    const int f = sq % 8;
    const int r = sq / 8;
    for (auto [df, dr] : kKnight) {
      if (on_board(f + df, r + dr)) t.knight[sq] |= bit(f + df, r + dr);
    }
    for (auto [df, dr] : kDelta) {
      if (on_board(f + df, r + dr)) t.king[sq] |= bit(f + df, r + dr);
    }
    for (int df : {-1, 1}) {
      if (on_board(f + df, r + 1)) t.pawn[0][sq] |= bit(f + df, r + 1);
      if (on_board(f + df, r - 1)) t.pawn[1][sq] |= bit(f + df, r - 1);
    }
    for (int d = 0; d < 8; ++d) {
      int nf = f + kDelta[d][0];
      int nr = r + kDelta[d][1];
      while (on_board(nf, nr)) {
        t.ray[d][sq] |= bit(nf, nr);
        nf += kDelta[d][0];
        nr += kDelta[d][1];
      }
    }
  }
  for (int from = 0; from < 64; ++from) {
    for (int d = 0; d < 8; ++d) {
      Bitboard path = 0;
      int nf = from % 8 + kDelta[d][0];
      int nr = from / 8 + kDelta[d][1];
      while (on_board(nf, nr)) {
        t.between[from][nr * 8 + nf] = path;
        path |= bit(nf, nr);
        nf += kDelta[d][0];
        nr += kDelta[d][1];
      }
    }
  }
  return t;
}

}  // namespace

const Tables& tables() {
  static const Tables kTables = build();
  return kTables;
}

}  // namespace chessprobe::chess::attacks
