#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "chessprobe/chess/movegen.hpp"
#include "chessprobe/datagen/corpus.hpp"
#include "chessprobe/datagen/probes.hpp"
#include "chessprobe/datagen/splits.hpp"
#include "chessprobe/error.hpp"
#include "chessprobe/notation/moves.hpp"
#include "support/games.hpp"
#include "support/synthetic_pgn.hpp"

namespace {

using namespace chessprobe;
using namespace chessprobe::datagen;
using chess::Board;
using chess::Move;
using chess::PieceType;
using chess::SquareSet;
using notation::Token;
using notation::uci_join;
using notation::uci_split;

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no chessprobe::Error thrown";
  return ErrorCode::InvalidArgument;
}

IngestResult ingest_text(const std::string& pgn) {
  std::istringstream in(pgn);
  return ingest_pgn(in, "t");
}

SquareSet squares(std::string_view csv) {
  SquareSet s;
  while (!csv.empty()) {
    const auto comma = csv.find(',');
    s.insert(*chess::Square::parse(csv.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    csv.remove_prefix(comma + 1);
  }
  return s;
}

GameRecord record(std::string_view uci) {
  GameRecord g;
  g.moves = uci_split(uci);
  g.id = game_id(g.moves);
  g.source = "fixture";
  return g;
}

// A game of exactly `plies` legal moves.
GameRecord game_of_length(std::uint64_t seed, int plies) {
  Rng rng(seed);
  while (true) {
    auto moves = testsupport::random_game(rng, plies);
    if (static_cast<int>(moves.size()) == plies) {
      GameRecord g;
      g.moves = moves;
      g.id = game_id(moves);
      return g;
    }
  }
}

// ---------------------------------------------------------------- ingest

TEST(Ingest, RunningExampleMovetext) {
  const auto r = ingest_text("1. e4 e5 2. Nf3 *\n");
  ASSERT_EQ(r.games.size(), 1u);
  EXPECT_EQ(uci_join(r.games[0].moves), "e2e4 e7e5 g1f3");
  EXPECT_EQ(r.games[0].id, game_id(r.games[0].moves));
  EXPECT_EQ(r.games[0].source, "t#1");
}

TEST(Ingest, CastlingBecomesKingMove) {
  const auto r = ingest_text("1. e4 e5 2. Nf3 Nc6 3. Bc4 Bc5 4. O-O Nf6 5. d3 0-0 *");
  ASSERT_EQ(r.games.size(), 1u);
  EXPECT_TRUE(uci_join(r.games[0].moves).ends_with("e1g1 g8f6 d2d3 e8g8"));
}

TEST(Ingest, StripsCommentsVariationsNagsAndEscapes) {
  const std::string pgn =
      "% escaped line 1. d4\n"
      "[Event \"x\"]\n[White \"a \\\"quoted\\\" name\"]\n\n"
      "1. e4 {a comment (with parens)} e5 $1 2. Nf3 (2. f4 exf4 (2... d5) 3. Nf3) Nc6 ; rest of line 3. d4\n"
      "3. Bb5 a6!? 4. Ba4?! 1-0\n";
  const auto r = ingest_text(pgn);
  ASSERT_EQ(r.games.size(), 1u) << (r.skipped.empty() ? "" : r.skipped[0].reason);
  EXPECT_EQ(uci_join(r.games[0].moves), "e2e4 e7e5 g1f3 b8c6 f1b5 a7a6 b5a4");
}

TEST(Ingest, IllegalGameIsSkippedWithDiagnosticAndNextGameSurvives) {
  const auto r = ingest_text("[Event \"bad\"]\n\n1. e4 e5 2. Ke3 *\n\n[Event \"good\"]\n\n1. d4 d5 *\n");
  ASSERT_EQ(r.games.size(), 1u);
  EXPECT_EQ(uci_join(r.games[0].moves), "d2d4 d7d5");
  EXPECT_EQ(r.games[0].source, "t#2");
  ASSERT_EQ(r.skipped.size(), 1u);
  EXPECT_EQ(r.skipped[0].source, "t#1");
  EXPECT_NE(r.skipped[0].reason.find("ply 3"), std::string::npos);
}

TEST(Ingest, NonStandardStartsAndVariantsAreSkipped) {
  const auto r = ingest_text(
      "[FEN \"8/8/8/8/8/8/8/K6k w - - 0 1\"]\n[SetUp \"1\"]\n\n1. Kb1 *\n\n"
      "[Variant \"Chess960\"]\n\n1. e4 *\n\n"
      "[Variant \"Standard\"]\n\n1. e4 *\n");
  EXPECT_EQ(r.games.size(), 1u);
  EXPECT_EQ(r.skipped.size(), 2u);
}

TEST(Ingest, ByteOrderMarkAndCrlf) {
  const auto r = ingest_text("\xEF\xBB\xBF[Event \"x\"]\r\n\r\n1.e4 e5 2.Nf3 *\r\n");
  ASSERT_EQ(r.games.size(), 1u);
  EXPECT_EQ(uci_join(r.games[0].moves), "e2e4 e7e5 g1f3");
}

TEST(Ingest, RealTournamentFileMatchesPlyCountTags) {
  const std::string path = std::string(CHESSPROBE_TEST_DATA) + "/kasparov-deep-blue-1997.pgn";
  std::ifstream in(path);
  ASSERT_TRUE(in) << path;
  std::stringstream text;
  text << in.rdbuf();
  std::vector<int> ply_counts;
  const std::regex tag(R"re(\[PlyCount "(\d+)"\])re");
  const std::string content = text.str();
  for (std::sregex_iterator it(content.begin(), content.end(), tag), end; it != end; ++it) {
    ply_counts.push_back(std::stoi((*it)[1]));
  }
  const auto r = ingest_text(content);
  EXPECT_TRUE(r.skipped.empty());
  ASSERT_EQ(r.games.size(), ply_counts.size());
  ASSERT_EQ(r.games.size(), 6u);
  for (std::size_t i = 0; i < r.games.size(); ++i) {
    EXPECT_EQ(static_cast<int>(r.games[i].moves.size()), ply_counts[i]) << "game " << i + 1;
  }
}

// SAN written by the reference printer replays to the same moves.
TEST(Ingest, SyntheticCorpusRoundTrips) {
  std::stringstream pgn;
  const auto games = testsupport::write_synthetic_pgn(pgn, {.games = 60, .min_plies = 10, .max_plies = 200, .seed = 9});
  const auto r = ingest_pgn(pgn, "synthetic");
  EXPECT_TRUE(r.skipped.empty());
  ASSERT_EQ(r.games.size(), games.size());
  for (std::size_t i = 0; i < games.size(); ++i) ASSERT_EQ(r.games[i].moves, games[i]);
}

// ---------------------------------------------------------------- filter

TEST(Filter, LengthBoundariesAndDuplicates) {
  std::vector<GameRecord> games = {game_of_length(1, 9), game_of_length(2, 10), game_of_length(3, 150),
                                   game_of_length(4, 151)};
  games.push_back(games[1]);
  const auto r = filter_and_dedupe(games);
  EXPECT_EQ(r.stats.input, 5u);
  EXPECT_EQ(r.stats.kept, 2u);
  EXPECT_EQ(r.stats.too_short, 1u);
  EXPECT_EQ(r.stats.too_long, 1u);
  EXPECT_EQ(r.stats.duplicate, 1u);
  std::set<std::size_t> lengths;
  for (const auto& g : r.games) lengths.insert(g.moves.size());
  EXPECT_EQ(lengths, (std::set<std::size_t>{10, 150}));
}

TEST(Filter, IdempotentAndSortedById) {
  std::vector<GameRecord> games;
  for (std::uint64_t s = 0; s < 40; ++s) games.push_back(game_of_length(s, 10 + static_cast<int>(s % 7) * 25));
  games.push_back(games[3]);
  const auto once = filter_and_dedupe(games);
  const auto twice = filter_and_dedupe(once.games);
  ASSERT_EQ(once.games.size(), twice.games.size());
  for (std::size_t i = 0; i < once.games.size(); ++i) EXPECT_EQ(once.games[i].id, twice.games[i].id);
  EXPECT_TRUE(std::is_sorted(once.games.begin(), once.games.end(),
                             [](const auto& a, const auto& b) { return a.id < b.id; }));
  EXPECT_EQ(twice.stats.duplicate + twice.stats.too_long + twice.stats.too_short, 0u);
}

TEST(Corpus, FileRoundTrip) {
  std::vector<GameRecord> games = {record("e2e4 e7e5"), record("d2d4 d7d5 c2c4")};
  std::stringstream file;
  write_corpus(file, games);
  const auto back = read_corpus(file);
  ASSERT_EQ(back.size(), 2u);
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_EQ(back[i].id, games[i].id);
    EXPECT_EQ(back[i].source, games[i].source);
    EXPECT_EQ(back[i].moves, games[i].moves);
  }
  std::istringstream bad("abc\tsrc\n");
  EXPECT_EQ(code_of([&] { read_corpus(bad); }), ErrorCode::MalformedRecord);
  std::istringstream bad_move("abc\tsrc\te2e9\n");
  EXPECT_EQ(code_of([&] { read_corpus(bad_move); }), ErrorCode::MalformedRecord);
}

// ---------------------------------------------------------------- splits

std::vector<GameRecord> id_only_corpus(std::size_t n) {
  std::vector<GameRecord> games(n);
  for (std::size_t i = 0; i < n; ++i) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(std::to_string(i))));
    games[i].id = buf;
  }
  return games;
}

TEST(Splits, DefaultSizesNestingAndDisjointness) {
  const auto corpus = id_only_corpus(281'000);
  SplitSpec spec;
  spec.seed = 5;
  const Splits s = make_splits(corpus, spec);
  EXPECT_EQ(s[SplitName::TrainS].size(), 15'000u);
  EXPECT_EQ(s[SplitName::TrainM].size(), 50'000u);
  EXPECT_EQ(s[SplitName::TrainL].size(), 200'000u);
  EXPECT_EQ(s[SplitName::Dev].size(), 15'000u);
  EXPECT_EQ(s[SplitName::Test].size(), 15'000u);
  EXPECT_EQ(s[SplitName::ProbePool].size(), 50'000u);

  const std::set<std::string> L(s[SplitName::TrainL].begin(), s[SplitName::TrainL].end());
  const std::set<std::string> M(s[SplitName::TrainM].begin(), s[SplitName::TrainM].end());
  for (const auto& id : s[SplitName::TrainS]) EXPECT_TRUE(M.contains(id));
  for (const auto& id : s[SplitName::TrainM]) EXPECT_TRUE(L.contains(id));
  std::set<std::string> all(L);
  std::size_t total = L.size();
  for (SplitName n : {SplitName::Dev, SplitName::Test, SplitName::ProbePool}) {
    all.insert(s[n].begin(), s[n].end());
    total += s[n].size();
  }
  EXPECT_EQ(all.size(), total);
}

TEST(Splits, ManifestIsReproducibleAndSeedSensitive) {
  const auto corpus = id_only_corpus(500);
  SplitSpec spec{.train_s = 50, .train_m = 100, .train_l = 200, .dev = 50, .test = 50, .probe_pool = 100, .seed = 3};
  auto manifest = [&](const SplitSpec& sp) {
    std::ostringstream out;
    write_manifest(out, make_splits(corpus, sp));
    return out.str();
  };
  EXPECT_EQ(manifest(spec), manifest(spec));
  SplitSpec other = spec;
  other.seed = 4;
  EXPECT_NE(manifest(spec), manifest(other));

  // Input order does not matter.
  auto reversed = corpus;
  std::reverse(reversed.begin(), reversed.end());
  std::ostringstream out;
  write_manifest(out, make_splits(reversed, spec));
  EXPECT_EQ(out.str(), manifest(spec));

  std::istringstream in(manifest(spec));
  const Splits back = read_manifest(in);
  const Splits direct = make_splits(corpus, spec);
  for (SplitName n : kAllSplits) EXPECT_EQ(back[n], direct[n]);
}

TEST(Splits, ErrorsAndOverrides) {
  const auto corpus = id_only_corpus(100);
  SplitSpec spec;
  EXPECT_EQ(code_of([&] { make_splits(corpus, spec); }), ErrorCode::InsufficientCorpus);
  spec.apply_overrides("train-S=5,train-M=10,train-L=40,dev=10,test=10,probe-pool=40");
  EXPECT_EQ(spec.train_l, 40u);
  EXPECT_EQ(spec.probe_pool, 40u);
  EXPECT_NO_THROW(make_splits(corpus, spec));
  spec.apply_overrides("probe-pool=41");
  EXPECT_EQ(code_of([&] { make_splits(corpus, spec); }), ErrorCode::InsufficientCorpus);
  spec.apply_overrides("train-S=20,train-M=10");
  EXPECT_EQ(code_of([&] { make_splits(corpus, spec); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([&] { spec.apply_overrides("train-X=4"); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([&] { spec.apply_overrides("dev=ten"); }), ErrorCode::InvalidArgument);
}

// ---------------------------------------------------------------- probes

TEST(Probes, TaskTableGoldSets) {
  const Board b = testsupport::play(testsupport::kTasksPrefix);
  EXPECT_EQ(gold_answers(b, ProbeKind::EndActual, *Token::parse("f1")), squares("e2,d3,c4,b5,a6"));
  EXPECT_EQ(gold_answers(b, ProbeKind::EndOther, *Token::parse("f3")), squares("d2,g1,h4,g5,e5"));
  EXPECT_EQ(gold_answers(b, ProbeKind::StartActual, *Token::parse("B")), squares("f1,c1"));
  EXPECT_EQ(gold_answers(b, ProbeKind::StartOther, *Token::parse("N")), squares("f3,b1"));
}

TEST(Probes, BuiltFromTheRunningExample) {
  const GameRecord g = record(std::string(testsupport::kTasksPrefix) + " f1b5 a7a6");
  ProbeOptions opt{.count = 1, .prefix_min = 6, .prefix_max = 6, .seed = 1};
  const auto probes = build_probes(std::span(&g, 1), TrainingPrefixIndex{}, opt);
  ASSERT_EQ(probes.size(), 4u);
  const auto& ea = probes[0];
  EXPECT_EQ(ea.kind, ProbeKind::EndActual);
  EXPECT_EQ(ea.prompt, *Token::parse("f1"));
  EXPECT_EQ(ea.exm_gold, chess::Square::parse("b5"));
  EXPECT_EQ(ea.lgm_gold, squares("e2,d3,c4,b5,a6"));
  EXPECT_EQ(ea.id, g.id + "-6-EA");
  const auto& sa = probes[2];
  EXPECT_EQ(sa.kind, ProbeKind::StartActual);
  EXPECT_EQ(sa.prompt, *Token::parse("B"));
  EXPECT_EQ(sa.exm_gold, chess::Square::parse("f1"));
  EXPECT_EQ(sa.lgm_gold, squares("f1,c1"));
  const auto& eo = probes[1];
  EXPECT_FALSE(eo.exm_gold);
  EXPECT_NE(eo.prompt, ea.prompt);
  const auto& so = probes[3];
  EXPECT_FALSE(so.exm_gold);
  EXPECT_NE(so.prompt, sa.prompt);
  EXPECT_NE(so.prompt, Token::piece(PieceType::Pawn));
  EXPECT_EQ(join_tokens(ea.context_tokens()), "BOS e2 e4 e7 e5 g1 f3 b8 c6 d2 d4 h7 h6 f1");
}

class ProbeSet : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    std::stringstream pgn;
    testsupport::write_synthetic_pgn(pgn, {.games = 160, .min_plies = 60, .max_plies = 150, .seed = 77});
    auto games = filter_and_dedupe(ingest_pgn(pgn, "syn").games).games;
    pool_ = new std::vector<GameRecord>(games.begin(), games.begin() + 100);
    train_ = new std::vector<GameRecord>(games.begin() + 100, games.end());
    // One training game shares a pool game's opening so the exclusion check has work to do.
    GameRecord shared = (*pool_)[0];
    shared.moves.resize(80);
    shared.id = game_id(shared.moves);
    train_->push_back(shared);
    options_ = {.count = 300, .prefix_min = 51, .prefix_max = 100, .seed = 12};
    probes_ = new std::vector<ProbeInstance>(build_probes(*pool_, TrainingPrefixIndex(*train_), options_));
  }
  static void TearDownTestSuite() {
    delete pool_;
    delete train_;
    delete probes_;
  }

  static const GameRecord& game(const ProbeInstance& p) {
    return *std::find_if(pool_->begin(), pool_->end(), [&](const auto& g) { return g.id == p.game_id; });
  }

  static std::vector<GameRecord>* pool_;
  static std::vector<GameRecord>* train_;
  static std::vector<ProbeInstance>* probes_;
  static ProbeOptions options_;
};

std::vector<GameRecord>* ProbeSet::pool_ = nullptr;
std::vector<GameRecord>* ProbeSet::train_ = nullptr;
std::vector<ProbeInstance>* ProbeSet::probes_ = nullptr;
ProbeOptions ProbeSet::options_;

TEST_F(ProbeSet, FourKindsPerPairInSortedOrder) {
  ASSERT_EQ(probes_->size(), 4u * 300u);
  std::set<std::pair<std::string, int>> pairs;
  for (std::size_t i = 0; i < probes_->size(); i += 4) {
    for (std::size_t k = 0; k < 4; ++k) {
      const auto& p = (*probes_)[i + k];
      EXPECT_EQ(p.kind, kAllProbeKinds[k]);
      EXPECT_EQ(p.game_id, (*probes_)[i].game_id);
      EXPECT_EQ(p.prefix, (*probes_)[i].prefix);
    }
    pairs.emplace((*probes_)[i].game_id, (*probes_)[i].prefix_len());
  }
  EXPECT_EQ(pairs.size(), 300u);
  std::vector<std::pair<std::string, int>> order;
  for (std::size_t i = 0; i < probes_->size(); i += 4) order.emplace_back((*probes_)[i].game_id, (*probes_)[i].prefix_len());
  EXPECT_TRUE(std::is_sorted(order.begin(), order.end()));
}

TEST_F(ProbeSet, EveryProbeSatisfiesItsInvariants) {
  for (const auto& p : *probes_) {
    ASSERT_NO_THROW(validate_probe(p, 51, 100)) << p.id;
    const auto& g = game(p);
    ASSERT_LT(static_cast<std::size_t>(p.prefix_len()), g.moves.size());
    ASSERT_TRUE(std::equal(p.prefix.begin(), p.prefix.end(), g.moves.begin()));
    const Board b = p.board();
    const Move next = g.moves[static_cast<std::size_t>(p.prefix_len())];
    const PieceType actual = b.piece_at(next.from)->type;
    ASSERT_NE(actual, PieceType::Pawn);
    switch (p.kind) {
      case ProbeKind::EndActual:
        ASSERT_EQ(p.prompt, Token::square(next.from));
        ASSERT_EQ(p.exm_gold, next.to);
        break;
      case ProbeKind::StartActual:
        ASSERT_EQ(p.prompt, Token::piece(actual));
        ASSERT_EQ(p.exm_gold, next.from);
        break;
      case ProbeKind::EndOther: {
        ASSERT_NE(p.prompt, Token::square(next.from));
        const auto piece = b.piece_at(*p.prompt.as_square());
        ASSERT_TRUE(piece && piece->color == b.side_to_move() && piece->type != PieceType::Pawn);
        break;
      }
      case ProbeKind::StartOther:
        ASSERT_NE(p.prompt, Token::piece(actual));
        ASSERT_NE(p.prompt, Token::piece(PieceType::Pawn));
        break;
    }
  }
}

TEST_F(ProbeSet, PrefixesAreNeverTrainingPrefixes) {
  for (const auto& p : *probes_) {
    const std::string prefix = uci_join(p.prefix);
    for (const auto& t : *train_) {
      const std::string full = uci_join(t.moves);
      ASSERT_FALSE(full == prefix || full.starts_with(prefix + " ")) << p.id;
    }
  }
}

TEST_F(ProbeSet, PieceTypeCountsSumPerKind) {
  const auto counts = piece_type_counts(*probes_);
  ASSERT_EQ(counts.size(), 4u);
  for (const auto& [kind, row] : counts) {
    int total = 0;
    for (const auto& [type, n] : row) {
      EXPECT_NE(type, PieceType::Pawn);
      total += n;
    }
    EXPECT_EQ(total, 300);
  }
}

TEST_F(ProbeSet, DeterministicPerSeed) {
  const TrainingPrefixIndex index(*train_);
  auto text = [&](std::uint64_t seed) {
    ProbeOptions opt = options_;
    opt.seed = seed;
    std::ostringstream out;
    write_probes(out, build_probes(*pool_, index, opt));
    return out.str();
  };
  EXPECT_EQ(text(12), text(12));
  EXPECT_NE(text(12), text(13));
}

TEST_F(ProbeSet, FileRoundTrip) {
  std::stringstream file;
  write_probes(file, *probes_);
  const auto back = read_probes(file);
  ASSERT_EQ(back.size(), probes_->size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    const auto& a = (*probes_)[i];
    const auto& b = back[i];
    ASSERT_EQ(a.id, b.id);
    ASSERT_EQ(a.game_id, b.game_id);
    ASSERT_EQ(a.kind, b.kind);
    ASSERT_EQ(a.prefix, b.prefix);
    ASSERT_EQ(a.prompt, b.prompt);
    ASSERT_EQ(a.exm_gold, b.exm_gold);
    ASSERT_EQ(a.lgm_gold, b.lgm_gold);
  }
}

TEST_F(ProbeSet, ExhaustedPoolWhenConstraintsCannotBeMet) {
  ProbeOptions too_many = options_;
  too_many.count = 100'000;
  EXPECT_EQ(code_of([&] { build_probes(*pool_, TrainingPrefixIndex{}, too_many); }), ErrorCode::ExhaustedPool);
  // Every prefix is a training prefix when the pool is the training set.
  ProbeOptions one = options_;
  one.count = 1;
  EXPECT_EQ(code_of([&] { build_probes(*pool_, TrainingPrefixIndex(*pool_), one); }), ErrorCode::ExhaustedPool);
  ProbeOptions long_prefix = options_;
  long_prefix.prefix_min = 400;
  long_prefix.prefix_max = 500;
  EXPECT_EQ(code_of([&] { build_probes(*pool_, TrainingPrefixIndex{}, long_prefix); }), ErrorCode::ExhaustedPool);
}

TEST(TrainingIndex, RespectsMoveBoundaries) {
  std::vector<GameRecord> train = {record("a7a8q b1c3"), record("e2e4 e7e5")};
  const TrainingPrefixIndex index(train);
  EXPECT_TRUE(index.seen(uci_split("e2e4")));
  EXPECT_TRUE(index.seen(uci_split("e2e4 e7e5")));
  EXPECT_FALSE(index.seen(uci_split("e2e4 e7e5 g1f3")));
  EXPECT_FALSE(index.seen(uci_split("e2e4 e7e6")));
  EXPECT_FALSE(index.seen(uci_split("a7a8")));
  EXPECT_TRUE(index.seen(uci_split("a7a8q")));
}

TEST(ProbeFile, MalformedLinesNameTheLine) {
  const std::string good =
      "# header\n"
      "g-6-EA\tEnd-Actual\te2 e4 e7 e5 g1 f3 b8 c6 d2 d4 h7 h6\tf1\tb5\te2,d3,c4,b5,a6\n";
  std::istringstream ok(good);
  EXPECT_EQ(read_probes(ok).size(), 1u);
  for (const std::string bad : {
           "g-6-EA\tEnd-Actual\te2 e4\tf1\tb5\n",                               // 5 fields
           "g-6-EA\tMiddle\te2 e4\tf1\tb5\te2\n",                               // unknown kind
           "g-6-EA\tEnd-Actual\te2 e5\tf1\tb5\te2\n",                           // illegal prefix
           "g-6-EA\tEnd-Actual\te2 e4\tz9\tb5\te2\n",                           // bad prompt
           "g-6-EA\tEnd-Actual\te2 e4\tf1\tb9\te2\n",                           // bad exm
           "g-6-EA\tEnd-Actual\te2 e4\tf1\tb5\te2,x\n",                         // bad lgm
       }) {
    std::istringstream in("# header\n" + bad);
    try {
      read_probes(in);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::MalformedRecord);
      EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
    }
  }
}

TEST(ProbeValidation, DetectsTamperedGold) {
  const GameRecord g = record(std::string(testsupport::kTasksPrefix) + " f1b5 a7a6");
  auto probes = build_probes(std::span(&g, 1), TrainingPrefixIndex{}, {.count = 1, .prefix_min = 6, .prefix_max = 6, .seed = 1});
  auto p = probes[0];
  EXPECT_NO_THROW(validate_probe(p, 6, 6));
  EXPECT_EQ(code_of([&] { validate_probe(p, 51, 100); }), ErrorCode::MalformedRecord);
  p.lgm_gold.erase(*chess::Square::parse("a6"));
  EXPECT_EQ(code_of([&] { validate_probe(p, 6, 6); }), ErrorCode::MalformedRecord);
  p = probes[0];
  p.exm_gold = chess::Square::parse("h3");
  EXPECT_EQ(code_of([&] { validate_probe(p, 6, 6); }), ErrorCode::MalformedRecord);
  p = probes[1];
  p.exm_gold = chess::Square::parse("e2");
  EXPECT_EQ(code_of([&] { validate_probe(p, 6, 6); }), ErrorCode::MalformedRecord);
}

}  // namespace
