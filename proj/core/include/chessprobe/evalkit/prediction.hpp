#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chessprobe/notation/vocabulary.hpp"

namespace chessprobe::evalkit {

using ScoreRow = std::array<double, notation::Token::kVocabularySize>;

struct Prediction {
  std::string probe_id;
  std::vector<notation::Token> ranked;  // best first, no duplicates
  std::optional<ScoreRow> scores;       // set when read from a score row
  std::size_t line = 0;                 // source line, 0 when built in memory
};

/// Ranks the whole vocabulary by descending score; ties keep vocabulary order.
/// NaN scores are rejected with Error(MalformedRecord).
Prediction prediction_from_scores(std::string probe_id, const ScoreRow& scores);

/// Prediction file: one record per line, "<probe id>\t<body>", where body is
/// either space-separated ranked tokens or exactly 77 scores in vocabulary
/// order. Blank lines and lines starting with '#' are ignored. Unknown tokens
/// raise Error(UnknownToken) and other defects Error(MalformedRecord); both
/// name the line.
std::vector<Prediction> read_predictions(std::istream& in);

/// Writes ranked-token records.
void write_predictions(std::ostream& out, std::span<const Prediction> predictions);

}  // namespace chessprobe::evalkit
