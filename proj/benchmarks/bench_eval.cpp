#include <benchmark/benchmark.h>

#include <vector>

#include "chessprobe/chess/movegen.hpp"
#include "chessprobe/datagen/probes.hpp"
#include "chessprobe/evalkit/scoring.hpp"
#include "chessprobe/evalkit/taxonomy.hpp"
#include "chessprobe/notation/moves.hpp"
#include "chessprobe/notation/tokenize.hpp"
#include "chessprobe/predictors/random_legal.hpp"
#include "chessprobe/random.hpp"

using namespace chessprobe;

namespace {

std::vector<chess::Move> playout(Rng& rng, int plies) {
  std::vector<chess::Move> moves;
  chess::Board b = chess::Board::initial();
  for (int i = 0; i < plies; ++i) {
    const auto legal = chess::legal_moves(b);
    if (legal.empty()) break;
    moves.push_back(legal[rng.below(legal.size())]);
    b = chess::apply_move(b, moves.back());
  }
  return moves;
}

std::vector<datagen::GameRecord> games(int n) {
  Rng rng(3);
  std::vector<datagen::GameRecord> out;
  while (static_cast<int>(out.size()) < n) {
    datagen::GameRecord g;
    g.moves = playout(rng, 120);
    if (g.moves.size() < 110) continue;
    g.id = datagen::game_id(g.moves);
    g.source = "bench";
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

static void BM_TokenizeRap(benchmark::State& state) {
  const auto pool = games(50);
  const auto scheme = notation::NotationScheme::rap(0.15);
  Rng rng(1);
  std::size_t moves = 0;
  for (auto _ : state) {
    for (const auto& g : pool) {
      auto seq = notation::tokenize_game(g.moves, scheme, rng);
      benchmark::DoNotOptimize(seq.tokens.data());
      moves += g.moves.size();
    }
  }
  state.counters["moves/s"] = benchmark::Counter(static_cast<double>(moves), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_TokenizeRap)->Unit(benchmark::kMillisecond);

static void BM_ClassifyIllegal(benchmark::State& state) {
  Rng rng(5);
  std::vector<chess::Board> boards;
  chess::Board b = chess::Board::initial();
  for (const auto& m : playout(rng, 60)) {
    b = chess::apply_move(b, m);
    boards.push_back(b);
  }
  struct Triple {
    const chess::Board* board;
    chess::Square from, to;
  };
  std::vector<Triple> triples;
  for (const auto& board : boards) {
    for (int i = 0; i < 64; ++i) {
      const auto from = chess::Square::from_index(i);
      const auto piece = board.piece_at(from);
      if (!piece || piece->color != board.side_to_move()) continue;
      const auto legal = chess::legal_destinations(board, from);
      for (int j = 0; j < 64; ++j) {
        const auto to = chess::Square::from_index(j);
        if (j != i && !legal.contains(to)) triples.push_back({&board, from, to});
      }
    }
  }
  for (auto _ : state) {
    for (const auto& t : triples) benchmark::DoNotOptimize(evalkit::classify_illegal_end(*t.board, t.from, t.to));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * triples.size()));
}
BENCHMARK(BM_ClassifyIllegal)->Unit(benchmark::kMillisecond);

static void BM_ScoreRandomLegal(benchmark::State& state) {
  const auto pool = games(200);
  const auto probes = datagen::build_probes(pool, datagen::TrainingPrefixIndex(), {.count = 500, .seed = 9});
  std::vector<evalkit::Prediction> preds;
  for (const auto& p : probes) preds.push_back(predictors::random_legal_predict(p, 1));
  const int workers = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto results = evalkit::score_all(probes, preds, workers);
    benchmark::DoNotOptimize(evalkit::aggregate(results));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * probes.size()));
}
BENCHMARK(BM_ScoreRandomLegal)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
