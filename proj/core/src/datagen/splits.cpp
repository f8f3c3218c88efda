#include "chessprobe/datagen/splits.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <istream>
#include <numeric>
#include <ostream>
#include <unordered_map>

#include "chessprobe/error.hpp"
#include "chessprobe/random.hpp"

namespace chessprobe::datagen {

std::string_view to_string(SplitName name) {
  switch (name) {
    case SplitName::TrainS: return "train-S";
    case SplitName::TrainM: return "train-M";
    case SplitName::TrainL: return "train-L";
    case SplitName::Dev: return "dev";
    case SplitName::Test: return "test";
    case SplitName::ProbePool: return "probe-pool";
  }
  return "?";
}

namespace {

std::optional<SplitName> split_from_string(std::string_view text) {
  for (SplitName n : kAllSplits) {
    std::string_view name = to_string(n);
    if (text.size() == name.size() &&
        std::equal(text.begin(), text.end(), name.begin(),
                   [](unsigned char a, unsigned char b) { return std::tolower(a) == std::tolower(b); })) {
      return n;
    }
  }
  return std::nullopt;
}

}  // namespace

std::size_t SplitSpec::size_of(SplitName name) const {
  switch (name) {
    case SplitName::TrainS: return train_s;
    case SplitName::TrainM: return train_m;
    case SplitName::TrainL: return train_l;
    case SplitName::Dev: return dev;
    case SplitName::Test: return test;
    case SplitName::ProbePool: return probe_pool;
  }
  return 0;
}

std::size_t& SplitSpec::size_of(SplitName name) {
  switch (name) {
    case SplitName::TrainS: return train_s;
    case SplitName::TrainM: return train_m;
    case SplitName::TrainL: return train_l;
    case SplitName::Dev: return dev;
    case SplitName::Test: return test;
    case SplitName::ProbePool: return probe_pool;
  }
  return train_l;
}

void SplitSpec::apply_overrides(std::string_view text) {
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    auto name = split_from_string(item.substr(0, eq));
    std::size_t value = 0;
    bool ok = name && eq != std::string_view::npos;
    if (ok) {
      std::string_view number = item.substr(eq + 1);
      auto [ptr, ec] = std::from_chars(number.data(), number.data() + number.size(), value);
      ok = ec == std::errc{} && ptr == number.data() + number.size();
    }
    if (!ok) throw Error(ErrorCode::InvalidArgument, "bad split size '" + std::string(item) + "'");
    size_of(*name) = value;
  }
}

Splits make_splits(std::span<const GameRecord> games, const SplitSpec& spec) {
  if (!(spec.train_s <= spec.train_m && spec.train_m <= spec.train_l)) {
    throw Error(ErrorCode::InvalidArgument, "split sizes must satisfy train-S <= train-M <= train-L");
  }
  const std::size_t needed = spec.train_l + spec.dev + spec.test + spec.probe_pool;
  if (needed > games.size()) {
    throw Error(ErrorCode::InsufficientCorpus, "splits need " + std::to_string(needed) + " games, corpus has " +
                                                   std::to_string(games.size()));
  }
  std::vector<std::string> ids;
  ids.reserve(games.size());
  for (const GameRecord& g : games) ids.push_back(g.id);
  std::sort(ids.begin(), ids.end());
  Rng rng(spec.seed);
  rng.shuffle(std::span(ids));

  Splits out;
  auto take = [&](std::size_t begin, std::size_t count) {
    return std::vector<std::string>(ids.begin() + static_cast<std::ptrdiff_t>(begin),
                                    ids.begin() + static_cast<std::ptrdiff_t>(begin + count));
  };
  std::size_t cursor = 0;
  out[SplitName::TrainL] = take(cursor, spec.train_l);
  cursor += spec.train_l;
  out[SplitName::Dev] = take(cursor, spec.dev);
  cursor += spec.dev;
  out[SplitName::Test] = take(cursor, spec.test);
  cursor += spec.test;
  out[SplitName::ProbePool] = take(cursor, spec.probe_pool);
  out[SplitName::TrainM] = take(0, spec.train_m);
  out[SplitName::TrainS] = take(0, spec.train_s);
  return out;
}

void write_manifest(std::ostream& out, const Splits& splits) {
  for (SplitName name : kAllSplits) {
    for (const std::string& id : splits[name]) out << to_string(name) << '\t' << id << '\n';
  }
}

Splits read_manifest(std::istream& in) {
  Splits out;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    auto name = tab == std::string::npos ? std::nullopt : split_from_string(std::string_view(line).substr(0, tab));
    if (!name) throw Error(ErrorCode::MalformedRecord, "manifest line " + std::to_string(line_number));
    out[*name].push_back(line.substr(tab + 1));
  }
  return out;
}

std::vector<GameRecord> select_games(std::span<const GameRecord> corpus, std::span<const std::string> ids) {
  std::unordered_map<std::string_view, const GameRecord*> by_id;
  by_id.reserve(corpus.size());
  for (const GameRecord& g : corpus) by_id.emplace(g.id, &g);
  std::vector<GameRecord> out;
  out.reserve(ids.size());
  for (const std::string& id : ids) {
    auto it = by_id.find(id);
    if (it == by_id.end()) throw Error(ErrorCode::MalformedRecord, "game id " + id + " not in corpus");
    out.push_back(*it->second);
  }
  return out;
}

}  // namespace chessprobe::datagen
