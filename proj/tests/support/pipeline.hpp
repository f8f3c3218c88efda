#pragma once

// Runs the command-line pipeline in process over a synthetic corpus and
// collects every file it writes.

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cli/commands.hpp"
#include "support/synthetic_pgn.hpp"

namespace testsupport {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

inline CliResult cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  CliResult r;
  r.code = chessprobe::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct PipelineRun {
  std::vector<std::pair<std::string, CliResult>> steps;
  std::map<std::string, std::string> files;  // file name -> bytes

  bool ok() const {
    for (const auto& [name, r] : steps) {
      if (r.code != 0) return false;
    }
    return true;
  }
};

/// ingest -> split -> tokenize -> probes -> baselines -> eval -> perplexity in `dir`.
inline PipelineRun run_pipeline(const std::filesystem::path& dir, std::uint64_t seed = 1) {
  namespace fs = std::filesystem;
  fs::remove_all(dir);
  fs::create_directories(dir);
  {
    std::ofstream pgn(dir / "games.pgn");
    write_synthetic_pgn(pgn, {.games = 220, .min_plies = 70, .max_plies = 150, .seed = seed});
  }
  auto p = [&](const char* name) { return (dir / name).string(); };
  const std::string s = std::to_string(seed);
  PipelineRun run;
  auto step = [&](const std::string& name, std::vector<std::string> args) {
    run.steps.emplace_back(name, cli(std::move(args)));
    return run.steps.back().second.code == 0;
  };
  step("ingest", {"ingest", p("games.pgn"), "--out", p("corpus.tsv")}) &&
      step("split", {"split", "--corpus", p("corpus.tsv"), "--seed", s, "--splits",
                     "train-S=20,train-M=40,train-L=80,dev=20,test=20,probe-pool=90", "--out", p("manifest.tsv")}) &&
      step("tokenize", {"tokenize", "--corpus", p("corpus.tsv"), "--manifest", p("manifest.tsv"), "--scheme",
                        "rap:0.15", "--seed", s, "--out", p("train.tok")}) &&
      step("probes", {"probes", "--corpus", p("corpus.tsv"), "--manifest", p("manifest.tsv"), "--n-probes", "60",
                      "--seed", s, "--out", p("probes.tsv")}) &&
      step("random-legal", {"baseline", "random-legal", "--probes", p("probes.tsv"), "--seed", s, "--out",
                            p("random.pred")}) &&
      step("ngram", {"baseline", "ngram", "--probes", p("probes.tsv"), "--tokens", p("train.tok"), "--save-model",
                     p("model.ngram"), "--out", p("ngram.pred")}) &&
      step("eval", {"eval", "--probes", p("probes.tsv"), "--predictions", p("ngram.pred"), "--random-legal",
                    "--trials", "200", "--seed", s, "--out", p("report.txt")}) &&
      step("perplexity", {"perplexity", "--model", p("model.ngram"), "--corpus", p("corpus.tsv"), "--manifest",
                          p("manifest.tsv"), "--split", "test"});
  for (const auto& entry : fs::directory_iterator(dir)) run.files[entry.path().filename().string()] = slurp(entry.path());
  return run;
}

}  // namespace testsupport
