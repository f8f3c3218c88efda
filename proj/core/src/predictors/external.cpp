#include "chessprobe/predictors/external.hpp"

#include <fstream>
#include <unordered_map>

#include "chessprobe/error.hpp"

namespace chessprobe::predictors {

std::vector<evalkit::Prediction> align_predictions(std::span<const datagen::ProbeInstance> probes,
                                                   std::vector<evalkit::Prediction> predictions) {
  std::unordered_map<std::string, std::size_t> slot;
  slot.reserve(probes.size());
  for (std::size_t i = 0; i < probes.size(); ++i) slot.emplace(probes[i].id, i);

  std::vector<evalkit::Prediction> out(probes.size());
  std::vector<bool> filled(probes.size(), false);
  for (evalkit::Prediction& p : predictions) {
    const std::string where = p.line ? "prediction line " + std::to_string(p.line) + ": " : std::string();
    auto it = slot.find(p.probe_id);
    if (it == slot.end()) throw Error(ErrorCode::MalformedRecord, where + "unknown probe id " + p.probe_id);
    if (filled[it->second]) throw Error(ErrorCode::DuplicateProbe, where + "second prediction for " + p.probe_id);
    filled[it->second] = true;
    out[it->second] = std::move(p);
  }
  for (std::size_t i = 0; i < probes.size(); ++i) {
    if (!filled[i]) throw Error(ErrorCode::MissingProbe, "no prediction for probe " + probes[i].id);
  }
  return out;
}

evalkit::EvalReport run_external(std::span<const datagen::ProbeInstance> probes, std::istream& predictions,
                                 int workers) {
  auto aligned = align_predictions(probes, evalkit::read_predictions(predictions));
  const auto results = evalkit::score_all(probes, aligned, workers);
  return evalkit::aggregate(results);
}

evalkit::EvalReport run_external(const std::filesystem::path& probe_file, const std::filesystem::path& prediction_file,
                                 int workers) {
  std::ifstream probe_in(probe_file);
  if (!probe_in) throw Error(ErrorCode::Io, "cannot open " + probe_file.string());
  std::ifstream prediction_in(prediction_file);
  if (!prediction_in) throw Error(ErrorCode::Io, "cannot open " + prediction_file.string());
  const auto probes = datagen::read_probes(probe_in);
  return run_external(probes, prediction_in, workers);
}

}  // namespace chessprobe::predictors
