#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "chessprobe/datagen/probes.hpp"
#include "chessprobe/evalkit/prediction.hpp"
#include "chessprobe/evalkit/scoring.hpp"

namespace chessprobe::predictors {

/// Orders `predictions` to match `probes`. Throws Error(DuplicateProbe) for a
/// repeated id, Error(MissingProbe) for a probe without a prediction and
/// Error(MalformedRecord) for a prediction naming no probe; messages carry the
/// probe id and, where there is one, the prediction line.
std::vector<evalkit::Prediction> align_predictions(std::span<const datagen::ProbeInstance> probes,
                                                   std::vector<evalkit::Prediction> predictions);

/// Reads, validates and scores an external prediction stream.
evalkit::EvalReport run_external(std::span<const datagen::ProbeInstance> probes, std::istream& predictions,
                                 int workers = 1);

/// Same, from a probe file and a prediction file.
evalkit::EvalReport run_external(const std::filesystem::path& probe_file, const std::filesystem::path& prediction_file,
                                 int workers = 1);

}  // namespace chessprobe::predictors
