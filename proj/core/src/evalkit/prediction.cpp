#include "chessprobe/evalkit/prediction.hpp"

#include <algorithm>
#include <bitset>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "chessprobe/error.hpp"

namespace chessprobe::evalkit {

using notation::Token;

Prediction prediction_from_scores(std::string probe_id, const ScoreRow& scores) {
  for (double s : scores) {
    if (std::isnan(s)) throw Error(ErrorCode::MalformedRecord, "prediction " + probe_id + ": NaN score");
  }
  std::array<int, Token::kVocabularySize> order;
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return scores[a] > scores[b]; });
  Prediction p;
  p.probe_id = std::move(probe_id);
  p.ranked.reserve(order.size());
  for (int id : order) p.ranked.push_back(Token::from_id(id));
  p.scores = scores;
  return p;
}

namespace {

std::optional<double> parse_number(const std::string& text) {
  const char* begin = text.c_str();
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  if (end == begin || *end != '\0') return std::nullopt;
  return value;
}

}  // namespace

std::vector<Prediction> read_predictions(std::istream& in) {
  std::vector<Prediction> out;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const std::string where = "prediction line " + std::to_string(line_number) + ": ";
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) throw Error(ErrorCode::MalformedRecord, where + "expected '<id>\\t<body>'");

    std::vector<std::string> fields;
    std::istringstream body(line.substr(tab + 1));
    for (std::string f; body >> f;) fields.push_back(std::move(f));
    if (fields.empty()) throw Error(ErrorCode::MalformedRecord, where + "empty prediction");

    Prediction p;
    if (auto first = parse_number(fields.front())) {
      if (fields.size() != static_cast<std::size_t>(Token::kVocabularySize)) {
        throw Error(ErrorCode::MalformedRecord,
                    where + "score rows need 77 values, got " + std::to_string(fields.size()));
      }
      ScoreRow scores{};
      for (std::size_t i = 0; i < fields.size(); ++i) {
        auto value = parse_number(fields[i]);
        if (!value || std::isnan(*value)) throw Error(ErrorCode::MalformedRecord, where + "bad score '" + fields[i] + "'");
        scores[i] = *value;
      }
      p = prediction_from_scores(line.substr(0, tab), scores);
    } else {
      p.probe_id = line.substr(0, tab);
      std::bitset<Token::kVocabularySize> seen;
      for (const std::string& f : fields) {
        auto token = Token::parse(f);
        if (!token) throw Error(ErrorCode::UnknownToken, where + "unknown token '" + f + "'");
        if (seen.test(static_cast<std::size_t>(token->id()))) {
          throw Error(ErrorCode::MalformedRecord, where + "duplicate token '" + f + "'");
        }
        seen.set(static_cast<std::size_t>(token->id()));
        p.ranked.push_back(*token);
      }
    }
    p.line = line_number;
    out.push_back(std::move(p));
  }
  return out;
}

void write_predictions(std::ostream& out, std::span<const Prediction> predictions) {
  for (const Prediction& p : predictions) {
    out << p.probe_id << '\t' << notation::join_tokens(p.ranked) << '\n';
  }
}

}  // namespace chessprobe::evalkit
