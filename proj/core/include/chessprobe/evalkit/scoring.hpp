#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chessprobe/chess/types.hpp"
#include "chessprobe/datagen/probes.hpp"
#include "chessprobe/evalkit/prediction.hpp"
#include "chessprobe/evalkit/taxonomy.hpp"

namespace chessprobe::evalkit {

struct ProbeResult {
  std::string probe_id;
  datagen::ProbeKind kind = datagen::ProbeKind::EndActual;
  chess::PieceType piece = chess::PieceType::Knight;
  notation::Token top1;
  std::optional<bool> exm_hit;  // Actual kinds only
  bool lgm_hit = false;
  double r_precision = 0.0;
  bool missing_ranks = false;  // fewer ranked tokens than gold answers
  // End kinds only: Legal on a hit, otherwise the illegal category.
  std::optional<ErrorCategory> category;
  std::optional<PseudoLegalSubcat> subcat;
  // End kinds with a square top-1 other than the prompt square.
  std::optional<int> king_distance;
};

/// Scores one prediction against its probe. A top-1 token on an End probe
/// that is not a square, or is the prompt square itself, is counted as
/// Unreachable. Throws Error(InvalidArgument) on an id mismatch and
/// Error(MalformedRecord) on an empty ranking.
ProbeResult score_probe(const datagen::ProbeInstance& probe, const Prediction& prediction);

/// Scores aligned spans, splitting the work over `workers` threads.
std::vector<ProbeResult> score_all(std::span<const datagen::ProbeInstance> probes,
                                   std::span<const Prediction> predictions, int workers = 1);

/// CHESSPROBE_WORKERS when set to a positive integer, otherwise 1.
int workers_from_env();

struct Tally {
  std::size_t n = 0;
  std::size_t exm_hits = 0;
  std::size_t lgm_hits = 0;
  double r_precision_sum = 0.0;
  std::size_t missing_ranks = 0;

  double exm() const { return n ? static_cast<double>(exm_hits) / static_cast<double>(n) : 0.0; }
  double lgm() const { return n ? static_cast<double>(lgm_hits) / static_cast<double>(n) : 0.0; }
  double r_precision() const { return n ? r_precision_sum / static_cast<double>(n) : 0.0; }
  void add(const ProbeResult& r);
  void merge(const Tally& other);
};

struct BaselineRow {
  std::string label;
  datagen::ProbeKind kind;
  double exm = 0.0;
  std::optional<double> ci_half_width;
};

// Index 0 is Actual, 1 is Other.
struct EvalReport {
  std::map<datagen::ProbeKind, Tally> per_kind;
  std::map<datagen::ProbeKind, std::map<chess::PieceType, Tally>> per_piece;
  std::array<std::array<std::size_t, 4>, 2> errors{};        // by kIllegalCategories order
  std::array<std::array<std::size_t, 4>, 2> pseudo_legal{};  // by kPseudoLegalSubcats order
  std::map<chess::PieceType, std::size_t> end_predictions;
  std::map<chess::PieceType, std::size_t> path_obstructions;
  double path_distance_sum = 0.0;
  std::size_t path_distance_count = 0;
  double legal_distance_sum = 0.0;
  std::size_t legal_distance_count = 0;
  std::optional<double> perplexity;
  std::vector<BaselineRow> baselines;

  std::size_t total() const;
  std::size_t illegal_end_predictions() const;
  std::optional<double> mean_path_obstruction_distance() const;
  std::optional<double> mean_legal_distance() const;

  void add(const ProbeResult& r);
  void merge(const EvalReport& other);
};

/// Folds results into a report. Throws Error(EmptyResults) for no results.
EvalReport aggregate(std::span<const ProbeResult> results);

/// Accuracy tables per kind and piece type, the error analysis, baseline rows,
/// then a "[metrics]" section of key=value lines.
std::string format_report(const EvalReport& report);

}  // namespace chessprobe::evalkit
