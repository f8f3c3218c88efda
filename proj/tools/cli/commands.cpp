#include "cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "chessprobe/chess/movegen.hpp"
#include "chessprobe/datagen/corpus.hpp"
#include "chessprobe/datagen/probes.hpp"
#include "chessprobe/datagen/splits.hpp"
#include "chessprobe/error.hpp"
#include "chessprobe/evalkit/perplexity.hpp"
#include "chessprobe/evalkit/scoring.hpp"
#include "chessprobe/notation/moves.hpp"
#include "chessprobe/notation/tokenize.hpp"
#include "chessprobe/predictors/external.hpp"
#include "chessprobe/predictors/ngram.hpp"
#include "chessprobe/predictors/random_legal.hpp"
#include "chessprobe/random.hpp"

namespace chessprobe::cli {

namespace {

namespace fs = std::filesystem;
using datagen::ProbeKind;
using datagen::SplitName;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  return in;
}

// "-" or empty writes to `out`.
void write_output(const std::string& path, std::ostream& out, const std::function<void(std::ostream&)>& fn) {
  if (path.empty() || path == "-") {
    fn(out);
    out.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorCode::Io, "cannot write " + path);
  fn(file);
  if (!file.flush()) throw Error(ErrorCode::Io, "write failed for " + path);
}

std::uint64_t require_seed(const std::optional<std::uint64_t>& seed, std::string_view command) {
  if (!seed) throw UsageError(std::string(command) + " samples randomly and needs --seed");
  return *seed;
}

std::vector<datagen::GameRecord> load_corpus(const std::string& path) {
  auto in = open_in(path);
  return datagen::read_corpus(in);
}

datagen::Splits load_manifest(const std::string& path) {
  auto in = open_in(path);
  return datagen::read_manifest(in);
}

std::vector<datagen::ProbeInstance> load_probes(const std::string& path) {
  auto in = open_in(path);
  return datagen::read_probes(in);
}

SplitName parse_split(const std::string& name) {
  for (SplitName s : datagen::kAllSplits) {
    if (datagen::to_string(s) == name) return s;
  }
  throw UsageError("unknown split '" + name + "'");
}

std::string percent(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", 100.0 * v);
  return buf;
}

void print_piece_counts(std::ostream& err, std::span<const datagen::ProbeInstance> probes) {
  const auto counts = datagen::piece_type_counts(probes);
  err << "prompt piece-type counts\n";
  err << "kind          ";
  for (chess::PieceType t : chess::kAllPieceTypes) {
    if (t != chess::PieceType::Pawn) err << chess::piece_letter(t) << "     ";
  }
  err << "total\n";
  for (const auto& [kind, row] : counts) {
    std::string name(datagen::to_string(kind));
    name.resize(14, ' ');
    err << name;
    int total = 0;
    for (chess::PieceType t : chess::kAllPieceTypes) {
      if (t == chess::PieceType::Pawn) continue;
      const auto it = row.find(t);
      const int n = it == row.end() ? 0 : it->second;
      total += n;
      std::string cell = std::to_string(n);
      cell.resize(6, ' ');
      err << cell;
    }
    err << total << '\n';
  }
}

predictors::NGramModel load_or_train_ngram(const std::string& model_path, const std::vector<std::string>& token_files,
                                           int order, double smoothing) {
  if (!model_path.empty()) {
    auto in = open_in(model_path);
    return predictors::NGramModel::load(in);
  }
  if (token_files.empty()) throw UsageError("ngram needs --model or at least one --tokens file");
  predictors::NGramModel model(order, smoothing);
  for (const std::string& path : token_files) {
    auto in = open_in(path);
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
      ++line_number;
      if (line.empty()) continue;
      try {
        model.train(notation::parse_tokens(line));
      } catch (const Error& e) {
        throw Error(e.code(), path + " line " + std::to_string(line_number) + ": " + e.what());
      }
    }
  }
  return model;
}

}  // namespace

bool selfcheck(std::ostream& out) {
  bool all = true;
  auto check = [&](const std::string& name, bool ok) {
    out << (ok ? "PASS  " : "FAIL  ") << name << '\n';
    all = all && ok;
  };
  const std::uint64_t expected[] = {1, 20, 400, 8902, 197281};
  for (int depth = 1; depth <= 4; ++depth) {
    const std::uint64_t n = chess::perft(chess::Board::initial(), depth);
    check("perft(" + std::to_string(depth) + ") = " + std::to_string(n), n == expected[depth]);
  }
  chess::Board b = chess::Board::initial();
  for (const chess::Move& m : notation::uci_split("e2e4 e7e5 g1f3 b8c6 d2d4 h7h6")) b = chess::apply_move(b, m);
  const auto set_of = [](std::string_view csv) {
    chess::SquareSet s;
    std::string_view rest = csv;
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      s.insert(*chess::Square::parse(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    return s;
  };
  auto gold_set = [&](ProbeKind kind, std::string_view prompt) {
    return datagen::gold_answers(b, kind, *notation::Token::parse(prompt));
  };
  check("End-Actual f1 -> e2,d3,c4,b5,a6", gold_set(ProbeKind::EndActual, "f1") == set_of("e2,d3,c4,b5,a6"));
  check("End-Other f3 -> d2,g1,h4,g5,e5", gold_set(ProbeKind::EndOther, "f3") == set_of("d2,g1,h4,g5,e5"));
  check("Start-Actual B -> f1,c1", gold_set(ProbeKind::StartActual, "B") == set_of("f1,c1"));
  check("Start-Other N -> f3,b1", gold_set(ProbeKind::StartOther, "N") == set_of("f3,b1"));
  return all;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chess language-model probing benchmark toolkit", "chessprobe"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");
  std::function<int()> action;

  // vocab
  std::string vocab_out;
  std::string vocab_verify;
  auto* vocab = app.add_subcommand("vocab", "Write or verify the 77-token vocabulary file");
  vocab->add_option("--out", vocab_out, "Output path (default stdout)");
  vocab->add_option("--verify", vocab_verify, "Check a vocabulary file against the built-in one");
  vocab->callback([&] {
    action = [&] {
      if (!vocab_verify.empty()) {
        auto in = open_in(vocab_verify);
        notation::verify_vocabulary(in);
        err << "vocabulary matches\n";
        return kExitOk;
      }
      write_output(vocab_out, out, [](std::ostream& o) { notation::write_vocabulary(o); });
      return kExitOk;
    };
  });

  // ingest
  std::vector<std::string> pgn_files;
  std::string ingest_out;
  datagen::LengthLimits limits;
  auto* ingest = app.add_subcommand("ingest", "Parse PGN files into a filtered, deduplicated corpus");
  ingest->add_option("pgn", pgn_files, "PGN files")->required()->check(CLI::ExistingFile);
  ingest->add_option("--out", ingest_out, "Corpus path (default stdout)");
  ingest->add_option("--min-plies", limits.min_plies, "Shortest kept game")->capture_default_str();
  ingest->add_option("--max-plies", limits.max_plies, "Longest kept game")->capture_default_str();
  ingest->callback([&] {
    action = [&] {
      std::vector<datagen::GameRecord> games;
      std::size_t skipped = 0;
      for (const std::string& path : pgn_files) {
        auto in = open_in(path);
        auto result = datagen::ingest_pgn(in, fs::path(path).filename().string());
        for (const auto& d : result.skipped) err << "skipped " << d.source << ": " << d.reason << '\n';
        skipped += result.skipped.size();
        std::move(result.games.begin(), result.games.end(), std::back_inserter(games));
      }
      const std::size_t parsed = games.size();
      auto filtered = datagen::filter_and_dedupe(std::move(games), limits);
      write_output(ingest_out, out, [&](std::ostream& o) { datagen::write_corpus(o, filtered.games); });
      const auto& s = filtered.stats;
      err << "parsed " << parsed << " games, " << skipped << " unparseable\n"
          << "kept " << s.kept << "; dropped: too-short " << s.too_short << ", too-long " << s.too_long
          << ", duplicate " << s.duplicate << '\n';
      return kExitOk;
    };
  });

  // split
  std::string split_corpus;
  std::string split_sizes;
  std::string split_out;
  std::optional<std::uint64_t> seed;
  auto* split = app.add_subcommand("split", "Seeded train/dev/test/probe-pool manifest");
  split->add_option("--corpus", split_corpus, "Corpus file")->required();
  split->add_option("--splits", split_sizes, "Size overrides, e.g. train-L=2000,dev=100");
  split->add_option("--seed", seed, "Shuffle seed");
  split->add_option("--out", split_out, "Manifest path (default stdout)");
  split->callback([&] {
    action = [&] {
      datagen::SplitSpec spec;
      spec.seed = require_seed(seed, "split");
      spec.apply_overrides(split_sizes);
      const auto corpus = load_corpus(split_corpus);
      const auto splits = datagen::make_splits(corpus, spec);
      write_output(split_out, out, [&](std::ostream& o) { datagen::write_manifest(o, splits); });
      for (SplitName n : datagen::kAllSplits) err << datagen::to_string(n) << ' ' << splits[n].size() << '\n';
      return kExitOk;
    };
  });

  // tokenize
  std::string tok_corpus;
  std::string tok_manifest;
  std::string tok_split = "train-L";
  std::string tok_scheme = "uci";
  std::optional<double> rap_p;
  std::string tok_out;
  auto* tokenize = app.add_subcommand("tokenize", "Write one token line per game of a split");
  tokenize->add_option("--corpus", tok_corpus, "Corpus file")->required();
  tokenize->add_option("--manifest", tok_manifest, "Split manifest")->required();
  tokenize->add_option("--split", tok_split, "Split name")->capture_default_str();
  tokenize->add_option("--scheme", tok_scheme, "uci | ap | rap:<p>")->capture_default_str();
  tokenize->add_option("--rap-p", rap_p, "Shorthand for --scheme rap:<p>");
  tokenize->add_option("--seed", seed, "Seed for RAP sampling");
  tokenize->add_option("--out", tok_out, "Token file (default stdout)");
  tokenize->callback([&] {
    action = [&] {
      const notation::NotationScheme scheme =
          rap_p ? notation::NotationScheme::rap(*rap_p) : notation::NotationScheme::parse(tok_scheme);
      std::uint64_t base_seed = 0;
      if (scheme.kind() == notation::NotationScheme::Kind::UciRap) base_seed = require_seed(seed, "tokenize --scheme rap");
      const auto corpus = load_corpus(tok_corpus);
      const auto splits = load_manifest(tok_manifest);
      const auto games = datagen::select_games(corpus, splits[parse_split(tok_split)]);
      write_output(tok_out, out, [&](std::ostream& o) {
        for (const auto& g : games) {
          Rng rng(derive_seed(base_seed, g.id));
          o << notation::token_file_line(notation::tokenize_game(g.moves, scheme, rng)) << '\n';
        }
      });
      err << games.size() << " games tokenized with " << scheme.to_string() << '\n';
      return kExitOk;
    };
  });

  // probes
  std::string probe_corpus;
  std::string probe_manifest;
  std::string probe_out;
  datagen::ProbeOptions probe_options;
  auto* probes = app.add_subcommand("probes", "Build the probing set from the probe pool");
  probes->add_option("--corpus", probe_corpus, "Corpus file")->required();
  probes->add_option("--manifest", probe_manifest, "Split manifest")->required();
  probes->add_option("--n-probes", probe_options.count, "(game, prefix) pairs; one probe per kind each")
      ->capture_default_str();
  probes->add_option("--prefix-min", probe_options.prefix_min, "Shortest prefix in plies")->capture_default_str();
  probes->add_option("--prefix-max", probe_options.prefix_max, "Longest prefix in plies")->capture_default_str();
  probes->add_option("--seed", seed, "Sampling seed");
  probes->add_option("--out", probe_out, "Probe file (default stdout)");
  probes->callback([&] {
    action = [&] {
      probe_options.seed = require_seed(seed, "probes");
      const auto corpus = load_corpus(probe_corpus);
      const auto splits = load_manifest(probe_manifest);
      const auto pool = datagen::select_games(corpus, splits[SplitName::ProbePool]);
      const auto train = datagen::select_games(corpus, splits[SplitName::TrainL]);
      const datagen::TrainingPrefixIndex index(train);
      const auto built = datagen::build_probes(pool, index, probe_options);
      for (const auto& p : built) datagen::validate_probe(p, probe_options.prefix_min, probe_options.prefix_max);
      write_output(probe_out, out, [&](std::ostream& o) { datagen::write_probes(o, built); });
      print_piece_counts(err, built);
      return kExitOk;
    };
  });

  // baseline
  std::string baseline_kind;
  std::string baseline_probes;
  std::string baseline_out;
  std::vector<std::string> token_files;
  std::string model_path;
  std::string save_model;
  int order = 3;
  double smoothing = 0.01;
  auto* baseline = app.add_subcommand("baseline", "Write predictions from a built-in predictor");
  baseline->add_option("kind", baseline_kind, "random-legal | ngram")
      ->required()
      ->check(CLI::IsMember({"random-legal", "ngram"}));
  baseline->add_option("--probes", baseline_probes, "Probe file")->required();
  baseline->add_option("--seed", seed, "Seed (random-legal)");
  baseline->add_option("--tokens", token_files, "Token files to train on (ngram)");
  baseline->add_option("--model", model_path, "Saved n-gram model instead of training");
  baseline->add_option("--save-model", save_model, "Write the trained n-gram model here");
  baseline->add_option("--order", order, "n-gram order")->capture_default_str();
  baseline->add_option("--smoothing", smoothing, "Additive smoothing constant")->capture_default_str();
  baseline->add_option("--out", baseline_out, "Prediction file (default stdout)");
  baseline->callback([&] {
    action = [&] {
      const auto probe_set = load_probes(baseline_probes);
      std::vector<evalkit::Prediction> predictions;
      if (baseline_kind == "random-legal") {
        const std::uint64_t s = require_seed(seed, "baseline random-legal");
        for (const auto& p : probe_set) predictions.push_back(predictors::random_legal_predict(p, s));
      } else {
        const auto model = load_or_train_ngram(model_path, token_files, order, smoothing);
        if (!save_model.empty()) write_output(save_model, out, [&](std::ostream& o) { model.save(o); });
        for (const auto& p : probe_set) predictions.push_back(model.predict(p));
      }
      write_output(baseline_out, out, [&](std::ostream& o) { evalkit::write_predictions(o, predictions); });
      err << predictions.size() << " predictions\n";
      return kExitOk;
    };
  });

  // eval
  std::string eval_probes;
  std::string eval_predictions;
  std::string eval_out;
  bool with_random_legal = false;
  std::size_t trials = 1000;
  auto* eval = app.add_subcommand("eval", "Score a prediction file and write the report");
  eval->add_option("--probes", eval_probes, "Probe file")->required();
  eval->add_option("--predictions", eval_predictions, "Prediction file")->required();
  eval->add_flag("--random-legal", with_random_legal, "Add analytic and Monte-Carlo Random Legal rows");
  eval->add_option("--trials", trials, "Monte-Carlo passes over the probe set")->capture_default_str();
  eval->add_option("--seed", seed, "Monte-Carlo seed (with --random-legal)");
  eval->add_option("--out", eval_out, "Report path (default stdout)");
  eval->callback([&] {
    action = [&] {
      std::optional<std::uint64_t> mc_seed;
      if (with_random_legal) mc_seed = require_seed(seed, "eval --random-legal");
      const auto probe_set = load_probes(eval_probes);
      auto in = open_in(eval_predictions);
      auto report = predictors::run_external(probe_set, in, evalkit::workers_from_env());
      if (mc_seed) {
        for (ProbeKind kind : {ProbeKind::EndActual, ProbeKind::StartActual}) {
          std::vector<datagen::ProbeInstance> subset;
          std::copy_if(probe_set.begin(), probe_set.end(), std::back_inserter(subset),
                       [&](const auto& p) { return p.kind == kind; });
          if (subset.empty()) continue;
          const auto mc = predictors::random_legal_monte_carlo(subset, trials, *mc_seed);
          report.baselines.push_back({"random_legal_analytic", kind, mc.expected, std::nullopt});
          report.baselines.push_back({"random_legal_monte_carlo", kind, mc.mean, mc.ci_half_width});
          err << datagen::to_string(kind) << " random legal: analytic " << percent(mc.expected) << ", monte-carlo "
              << percent(mc.mean) << " over " << mc.draws << " draws ("
              << (mc.within_ci() ? "within" : "outside") << " 99% CI)\n";
        }
      }
      write_output(eval_out, out, [&](std::ostream& o) { o << evalkit::format_report(report); });
      return kExitOk;
    };
  });

  // perplexity
  std::string ppl_corpus;
  std::string ppl_manifest;
  std::string ppl_split = "test";
  auto* perplexity = app.add_subcommand("perplexity", "Canonical per-move perplexity of an n-gram model");
  perplexity->add_option("--model", model_path, "Saved n-gram model");
  perplexity->add_option("--tokens", token_files, "Token files to train on instead");
  perplexity->add_option("--order", order, "n-gram order")->capture_default_str();
  perplexity->add_option("--smoothing", smoothing, "Additive smoothing constant")->capture_default_str();
  perplexity->add_option("--corpus", ppl_corpus, "Corpus file")->required();
  perplexity->add_option("--manifest", ppl_manifest, "Split manifest")->required();
  perplexity->add_option("--split", ppl_split, "Split to score")->capture_default_str();
  perplexity->callback([&] {
    action = [&] {
      const auto model = load_or_train_ngram(model_path, token_files, order, smoothing);
      const auto corpus = load_corpus(ppl_corpus);
      const auto splits = load_manifest(ppl_manifest);
      const auto games = datagen::select_games(corpus, splits[parse_split(ppl_split)]);
      std::vector<evalkit::GameLogProbs> scored;
      for (const auto& g : games) {
        evalkit::GameLogProbs entry;
        entry.moves = g.moves;
        std::vector<notation::Token> context{notation::Token::bos()};
        for (notation::Token t : notation::uci_tokens(g.moves)) {
          const auto row = model.next_distribution(context);
          double piece_mass = 0.0;
          for (chess::PieceType p : chess::kAllPieceTypes) piece_mass += row[notation::Token::piece(p).id()];
          entry.tokens.push_back({t, std::log(row[t.id()]), std::log(piece_mass)});
          context.push_back(t);
        }
        scored.push_back(std::move(entry));
      }
      const double value = evalkit::canonical_perplexity(scored, evalkit::PieceTypeMass::Renormalize);
      out << "perplexity=" << value << "\npiece_type_mass=renormalized\ngames=" << games.size() << '\n';
      return kExitOk;
    };
  });

  // selfcheck
  auto* self = app.add_subcommand("selfcheck", "Perft table and task-table fixtures");
  self->callback([&] { action = [&] { return selfcheck(out) ? kExitOk : kExitData; }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }
  try {
    return action ? action() : kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
}

}  // namespace chessprobe::cli
