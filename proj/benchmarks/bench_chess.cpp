#include <benchmark/benchmark.h>

#include "chessprobe/chess/board.hpp"
#include "chessprobe/chess/movegen.hpp"
#include "chessprobe/notation/moves.hpp"

using namespace chessprobe::chess;

namespace {

Board middlegame() {
  Board b = Board::initial();
  for (const auto& m : chessprobe::notation::uci_split(
           "e2e4 e7e5 g1f3 b8c6 f1b5 a7a6 b5a4 g8f6 e1g1 f8e7 f1e1 b7b5 a4b3 d7d6 c2c3 e8g8")) {
    b = apply_move(b, m);
  }
  return b;
}

}  // namespace

static void BM_PerftInitial(benchmark::State& state) {
  const Board b = Board::initial();
  const int depth = static_cast<int>(state.range(0));
  std::uint64_t nodes = 0;
  for (auto _ : state) {
    nodes = perft(b, depth);
    benchmark::DoNotOptimize(nodes);
  }
  state.counters["nodes/s"] = benchmark::Counter(static_cast<double>(nodes), benchmark::Counter::kIsIterationInvariantRate);
}
BENCHMARK(BM_PerftInitial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_LegalMovesMiddlegame(benchmark::State& state) {
  const Board b = middlegame();
  for (auto _ : state) {
    auto moves = legal_moves(b);
    benchmark::DoNotOptimize(moves.data());
  }
}
BENCHMARK(BM_LegalMovesMiddlegame);

static void BM_IsInCheck(benchmark::State& state) {
  const Board b = middlegame();
  for (auto _ : state) benchmark::DoNotOptimize(is_in_check(b, Color::White));
}
BENCHMARK(BM_IsInCheck);
