#include "chessprobe/evalkit/scoring.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "chessprobe/chess/geometry.hpp"
#include "chessprobe/error.hpp"

namespace chessprobe::evalkit {

using datagen::ProbeKind;
using notation::Token;

ProbeResult score_probe(const datagen::ProbeInstance& probe, const Prediction& prediction) {
  if (prediction.probe_id != probe.id) {
    throw Error(ErrorCode::InvalidArgument, "prediction " + prediction.probe_id + " scored against probe " + probe.id);
  }
  if (prediction.ranked.empty()) throw Error(ErrorCode::MalformedRecord, "prediction " + probe.id + " ranks nothing");
  const chess::Board board = probe.board();

  ProbeResult r;
  r.probe_id = probe.id;
  r.kind = probe.kind;
  r.piece = probe.prompt_piece_type(board);
  r.top1 = prediction.ranked.front();
  const auto top_square = r.top1.as_square();
  r.lgm_hit = top_square && probe.lgm_gold.contains(*top_square);
  if (probe.exm_gold) r.exm_hit = top_square && *top_square == *probe.exm_gold;

  const std::size_t R = static_cast<std::size_t>(probe.lgm_gold.size());
  r.missing_ranks = prediction.ranked.size() < R;
  std::size_t hits = 0;
  for (std::size_t i = 0; i < std::min(R, prediction.ranked.size()); ++i) {
    if (auto s = prediction.ranked[i].as_square(); s && probe.lgm_gold.contains(*s)) ++hits;
  }
  r.r_precision = R ? static_cast<double>(hits) / static_cast<double>(R) : 0.0;

  if (datagen::is_end_task(probe.kind)) {
    const chess::Square from = *probe.prompt.as_square();
    if (top_square && *top_square != from) r.king_distance = chess::king_distance(from, *top_square);
    if (r.lgm_hit) {
      r.category = ErrorCategory::Legal;
    } else if (!top_square || *top_square == from) {
      r.category = ErrorCategory::Unreachable;
    } else {
      r.category = classify_illegal_end(board, from, *top_square);
      if (r.category == ErrorCategory::PseudoLegal) r.subcat = subclassify_pseudo_legal(board, from, *top_square);
    }
  }
  return r;
}

std::vector<ProbeResult> score_all(std::span<const datagen::ProbeInstance> probes,
                                   std::span<const Prediction> predictions, int workers) {
  if (probes.size() != predictions.size()) {
    throw Error(ErrorCode::InvalidArgument, "probe and prediction counts differ");
  }
  std::vector<ProbeResult> out(probes.size());
  const std::size_t n = probes.size();
  const std::size_t threads = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(workers, 1)), 1, std::max<std::size_t>(n, 1));
  std::vector<std::exception_ptr> failures(threads);
  auto run = [&](std::size_t t) {
    try {
      for (std::size_t i = t; i < n; i += threads) out[i] = score_probe(probes[i], predictions[i]);
    } catch (...) {
      failures[t] = std::current_exception();
    }
  };
  if (threads == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(run, t);
  }
  for (auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  return out;
}

int workers_from_env() {
  const char* value = std::getenv("CHESSPROBE_WORKERS");
  if (!value) return 1;
  const int n = std::atoi(value);
  return n > 0 ? n : 1;
}

void Tally::add(const ProbeResult& r) {
  ++n;
  exm_hits += r.exm_hit.value_or(false);
  lgm_hits += r.lgm_hit;
  r_precision_sum += r.r_precision;
  missing_ranks += r.missing_ranks;
}

void Tally::merge(const Tally& o) {
  n += o.n;
  exm_hits += o.exm_hits;
  lgm_hits += o.lgm_hits;
  r_precision_sum += o.r_precision_sum;
  missing_ranks += o.missing_ranks;
}

namespace {

std::size_t category_index(ErrorCategory c) {
  return static_cast<std::size_t>(std::find(kIllegalCategories.begin(), kIllegalCategories.end(), c) -
                                  kIllegalCategories.begin());
}

std::size_t subcat_index(PseudoLegalSubcat s) { return static_cast<std::size_t>(s); }

std::string fixed(double value, int digits = 3) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

std::string percent(double value) { return fixed(100.0 * value, 1); }

std::string pad(std::string text, std::size_t width) {
  if (text.size() < width) text.append(width - text.size(), ' ');
  return text;
}

std::string kind_key(ProbeKind k) {
  std::string s(datagen::to_string(k));
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return c == '-' ? '_' : std::tolower(c); });
  return s;
}

}  // namespace

std::size_t EvalReport::total() const {
  std::size_t n = 0;
  for (const auto& [kind, tally] : per_kind) n += tally.n;
  return n;
}

std::size_t EvalReport::illegal_end_predictions() const {
  std::size_t n = 0;
  for (const auto& group : errors) {
    for (std::size_t c : group) n += c;
  }
  return n;
}

std::optional<double> EvalReport::mean_path_obstruction_distance() const {
  if (!path_distance_count) return std::nullopt;
  return path_distance_sum / static_cast<double>(path_distance_count);
}

std::optional<double> EvalReport::mean_legal_distance() const {
  if (!legal_distance_count) return std::nullopt;
  return legal_distance_sum / static_cast<double>(legal_distance_count);
}

void EvalReport::add(const ProbeResult& r) {
  per_kind[r.kind].add(r);
  per_piece[r.kind][r.piece].add(r);
  if (!r.category) return;
  ++end_predictions[r.piece];
  const std::size_t group = datagen::is_actual_task(r.kind) ? 0 : 1;
  if (*r.category == ErrorCategory::Legal) {
    if (r.king_distance) {
      legal_distance_sum += *r.king_distance;
      ++legal_distance_count;
    }
    return;
  }
  ++errors[group][category_index(*r.category)];
  if (r.subcat) ++pseudo_legal[group][subcat_index(*r.subcat)];
  if (*r.category == ErrorCategory::PathObstruction) {
    ++path_obstructions[r.piece];
    if (r.king_distance) {
      path_distance_sum += *r.king_distance;
      ++path_distance_count;
    }
  }
}

void EvalReport::merge(const EvalReport& o) {
  for (const auto& [kind, tally] : o.per_kind) per_kind[kind].merge(tally);
  for (const auto& [kind, pieces] : o.per_piece) {
    for (const auto& [piece, tally] : pieces) per_piece[kind][piece].merge(tally);
  }
  for (std::size_t g = 0; g < 2; ++g) {
    for (std::size_t i = 0; i < 4; ++i) {
      errors[g][i] += o.errors[g][i];
      pseudo_legal[g][i] += o.pseudo_legal[g][i];
    }
  }
  for (const auto& [piece, n] : o.end_predictions) end_predictions[piece] += n;
  for (const auto& [piece, n] : o.path_obstructions) path_obstructions[piece] += n;
  path_distance_sum += o.path_distance_sum;
  path_distance_count += o.path_distance_count;
  legal_distance_sum += o.legal_distance_sum;
  legal_distance_count += o.legal_distance_count;
  if (o.perplexity) perplexity = o.perplexity;
  baselines.insert(baselines.end(), o.baselines.begin(), o.baselines.end());
}

EvalReport aggregate(std::span<const ProbeResult> results) {
  if (results.empty()) throw Error(ErrorCode::EmptyResults, "no results to aggregate");
  EvalReport report;
  for (const ProbeResult& r : results) report.add(r);
  return report;
}

std::string format_report(const EvalReport& report) {
  std::ostringstream out;
  out << "== Accuracy (%) ==\n";
  out << pad("kind", 14) << pad("n", 7) << pad("ExM", 8) << pad("LgM", 8) << "R-Prec\n";
  for (const auto& [kind, t] : report.per_kind) {
    out << pad(std::string(datagen::to_string(kind)), 14) << pad(std::to_string(t.n), 7)
        << pad(datagen::is_actual_task(kind) ? percent(t.exm()) : "-", 8) << pad(percent(t.lgm()), 8)
        << percent(t.r_precision()) << '\n';
  }

  out << "\n== Accuracy by piece type (%) ==\n";
  out << pad("kind", 14) << pad("piece", 7) << pad("n", 7) << pad("ExM", 8) << "LgM\n";
  for (const auto& [kind, pieces] : report.per_piece) {
    for (const auto& [piece, t] : pieces) {
      out << pad(std::string(datagen::to_string(kind)), 14) << pad(std::string(1, chess::piece_letter(piece)), 7)
          << pad(std::to_string(t.n), 7) << pad(datagen::is_actual_task(kind) ? percent(t.exm()) : "-", 8)
          << percent(t.lgm()) << '\n';
    }
  }

  out << "\n== Ending-square errors ==\n";
  out << pad("category", 17) << pad("Actual", 8) << "Other\n";
  for (std::size_t i = 0; i < kIllegalCategories.size(); ++i) {
    out << pad(std::string(to_string(kIllegalCategories[i])), 17) << pad(std::to_string(report.errors[0][i]), 8)
        << report.errors[1][i] << '\n';
  }
  out << "\n== Pseudo-legal errors ==\n";
  out << pad("cell", 17) << pad("Actual", 8) << "Other\n";
  for (std::size_t i = 0; i < kPseudoLegalSubcats.size(); ++i) {
    out << pad(std::string(to_string(kPseudoLegalSubcats[i])), 17)
        << pad(std::to_string(report.pseudo_legal[0][i]), 8) << report.pseudo_legal[1][i] << '\n';
  }
  out << "\n== Path obstruction by piece type ==\n";
  for (const auto& [piece, n] : report.end_predictions) {
    const auto it = report.path_obstructions.find(piece);
    out << chess::piece_letter(piece) << "  " << (it == report.path_obstructions.end() ? 0 : it->second) << " / "
        << n << '\n';
  }
  auto distance = [](std::optional<double> d) { return d ? fixed(*d) : std::string("-"); };
  out << "mean king distance: path obstruction " << distance(report.mean_path_obstruction_distance())
      << ", legal " << distance(report.mean_legal_distance()) << '\n';

  if (!report.baselines.empty()) {
    out << "\n== Baselines (ExM %) ==\n";
    for (const BaselineRow& b : report.baselines) {
      out << pad(b.label, 26) << pad(std::string(datagen::to_string(b.kind)), 14) << percent(b.exm);
      if (b.ci_half_width) out << " +/- " << percent(*b.ci_half_width);
      out << '\n';
    }
  }

  out << "\n[metrics]\n";
  out << "total=" << report.total() << '\n';
  for (const auto& [kind, t] : report.per_kind) {
    const std::string key = kind_key(kind);
    out << key << ".n=" << t.n << '\n';
    if (datagen::is_actual_task(kind)) out << key << ".exm=" << fixed(t.exm(), 6) << '\n';
    out << key << ".lgm=" << fixed(t.lgm(), 6) << '\n';
    out << key << ".r_precision=" << fixed(t.r_precision(), 6) << '\n';
    out << key << ".missing_ranks=" << t.missing_ranks << '\n';
  }
  const char* groups[] = {"actual", "other"};
  for (std::size_t g = 0; g < 2; ++g) {
    for (std::size_t i = 0; i < 4; ++i) {
      out << "errors." << groups[g] << '.' << to_string(kIllegalCategories[i]) << '=' << report.errors[g][i] << '\n';
    }
    for (std::size_t i = 0; i < 4; ++i) {
      out << "pseudo_legal." << groups[g] << '.' << to_string(kPseudoLegalSubcats[i]) << '='
          << report.pseudo_legal[g][i] << '\n';
    }
  }
  if (auto d = report.mean_path_obstruction_distance()) out << "distance.path_obstruction=" << fixed(*d, 6) << '\n';
  if (auto d = report.mean_legal_distance()) out << "distance.legal=" << fixed(*d, 6) << '\n';
  if (report.perplexity) {
    out << "perplexity=" << fixed(*report.perplexity, 6) << '\n';
    out << "perplexity.piece_type_mass=renormalized\n";
  }
  for (const BaselineRow& b : report.baselines) {
    out << "baseline." << b.label << '.' << kind_key(b.kind) << ".exm=" << fixed(b.exm, 6) << '\n';
    if (b.ci_half_width) out << "baseline." << b.label << '.' << kind_key(b.kind) << ".ci99=" << fixed(*b.ci_half_width, 6) << '\n';
  }
  return out.str();
}

}  // namespace chessprobe::evalkit
