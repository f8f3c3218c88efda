#include "chessprobe/predictors/ngram.hpp"

#include <charconv>
#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "chessprobe/error.hpp"

namespace chessprobe::predictors {

using notation::Token;

NGramModel::NGramModel(int order, double smoothing) : order_(order), smoothing_(smoothing) {
  if (order < 1) throw Error(ErrorCode::InvalidArgument, "n-gram order must be at least 1");
  if (!(smoothing >= 0.0) || !std::isfinite(smoothing)) {
    throw Error(ErrorCode::InvalidArgument, "n-gram smoothing must be finite and non-negative");
  }
}

NGramModel::Context NGramModel::context_of(std::span<const Token> tokens) const {
  std::size_t begin = tokens.size();
  const std::size_t width = static_cast<std::size_t>(order_ - 1);
  while (begin > 0 && tokens.size() - begin < width) {
    --begin;
    if (tokens[begin] == Token::bos()) break;
  }
  Context ctx;
  for (std::size_t i = begin; i < tokens.size(); ++i) ctx.push_back(static_cast<std::uint8_t>(tokens[i].id()));
  return ctx;
}

void NGramModel::train(std::span<const Token> sequence) {
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    if (sequence[i] == Token::bos()) continue;  // BOS is context, never a target
    ++counts_[context_of(sequence.first(i))][static_cast<std::uint8_t>(sequence[i].id())];
  }
}

evalkit::ScoreRow NGramModel::next_distribution(std::span<const Token> context) const {
  evalkit::ScoreRow row{};
  double total = 0.0;
  if (auto it = counts_.find(context_of(context)); it != counts_.end()) {
    for (const auto& [id, n] : it->second) {
      row[id] = static_cast<double>(n);
      total += static_cast<double>(n);
    }
  }
  const double denom = total + smoothing_ * Token::kVocabularySize;
  if (denom <= 0.0) {
    row.fill(1.0 / Token::kVocabularySize);
    return row;
  }
  for (double& v : row) v = (v + smoothing_) / denom;
  return row;
}

evalkit::Prediction NGramModel::predict(const datagen::ProbeInstance& probe) const {
  const auto context = probe.context_tokens();
  return evalkit::prediction_from_scores(probe.id, next_distribution(context));
}

void NGramModel::save(std::ostream& out) const {
  out << "ngram " << order_ << ' ' << std::setprecision(17) << smoothing_ << '\n';
  for (const auto& [ctx, row] : counts_) {
    std::string ctx_text;
    for (std::uint8_t id : ctx) {
      if (!ctx_text.empty()) ctx_text.push_back(' ');
      ctx_text += Token::from_id(id).text();
    }
    if (ctx_text.empty()) ctx_text = "-";
    for (const auto& [id, n] : row) out << ctx_text << '\t' << Token::from_id(id).text() << '\t' << n << '\n';
  }
}

NGramModel NGramModel::load(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::MalformedRecord, "n-gram file is empty");
  std::istringstream header(line);
  std::string magic;
  int order = 0;
  double smoothing = -1.0;
  if (!(header >> magic >> order >> smoothing) || magic != "ngram") {
    throw Error(ErrorCode::MalformedRecord, "n-gram line 1: expected 'ngram <order> <smoothing>'");
  }
  NGramModel model(order, smoothing);
  std::size_t line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    const std::string where = "n-gram line " + std::to_string(line_number);
    const auto tab1 = line.find('\t');
    const auto tab2 = tab1 == std::string::npos ? std::string::npos : line.find('\t', tab1 + 1);
    if (tab2 == std::string::npos) throw Error(ErrorCode::MalformedRecord, where + ": expected 3 fields");
    Context ctx;
    const std::string ctx_text = line.substr(0, tab1);
    if (ctx_text != "-") {
      try {
        for (Token t : notation::parse_tokens(ctx_text)) ctx.push_back(static_cast<std::uint8_t>(t.id()));
      } catch (const Error& e) {
        throw Error(ErrorCode::UnknownToken, where + ": " + e.what());
      }
    }
    auto token = Token::parse(std::string_view(line).substr(tab1 + 1, tab2 - tab1 - 1));
    if (!token) throw Error(ErrorCode::UnknownToken, where + ": unknown token");
    std::uint64_t n = 0;
    const char* first = line.data() + tab2 + 1;
    const char* last = line.data() + line.size();
    auto [ptr, ec] = std::from_chars(first, last, n);
    if (ec != std::errc{} || ptr != last) throw Error(ErrorCode::MalformedRecord, where + ": bad count");
    model.counts_[ctx][static_cast<std::uint8_t>(token->id())] += n;
  }
  return model;
}

}  // namespace chessprobe::predictors
