#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chessprobe/datagen/corpus.hpp"

namespace chessprobe::datagen {

enum class SplitName { TrainS, TrainM, TrainL, Dev, Test, ProbePool };

inline constexpr std::array<SplitName, 6> kAllSplits = {SplitName::TrainS, SplitName::TrainM,
                                                        SplitName::TrainL, SplitName::Dev,
                                                        SplitName::Test,   SplitName::ProbePool};

/// "train-S", "train-M", "train-L", "dev", "test", "probe-pool".
std::string_view to_string(SplitName name);

struct SplitSpec {
  std::size_t train_s = 15'000;
  std::size_t train_m = 50'000;
  std::size_t train_l = 200'000;
  std::size_t dev = 15'000;
  std::size_t test = 15'000;
  std::size_t probe_pool = 50'000;
  std::uint64_t seed = 0;

  std::size_t size_of(SplitName name) const;
  std::size_t& size_of(SplitName name);

  /// Overrides sizes from "name=count" pairs separated by commas, e.g.
  /// "train-L=2000,dev=100". Throws Error(InvalidArgument) on unknown names.
  void apply_overrides(std::string_view text);
};

// Train-S and Train-M are prefixes of Train-L; the remaining splits are
// disjoint slices of the same seeded permutation.
struct Splits {
  std::array<std::vector<std::string>, 6> ids;  // indexed by SplitName

  const std::vector<std::string>& operator[](SplitName name) const { return ids[static_cast<int>(name)]; }
  std::vector<std::string>& operator[](SplitName name) { return ids[static_cast<int>(name)]; }
};

/// Sorts the corpus by id, shuffles it with `spec.seed`, then partitions.
/// Throws Error(InsufficientCorpus) when Train-L + dev + test + probe-pool
/// exceeds the corpus, and Error(InvalidArgument) unless S <= M <= L.
Splits make_splits(std::span<const GameRecord> games, const SplitSpec& spec);

/// "<split name>\t<game id>" per line, splits in kAllSplits order.
void write_manifest(std::ostream& out, const Splits& splits);
Splits read_manifest(std::istream& in);

/// The games of `corpus` listed in `ids`, in `ids` order. Throws
/// Error(MalformedRecord) for an id absent from the corpus.
std::vector<GameRecord> select_games(std::span<const GameRecord> corpus, std::span<const std::string> ids);

}  // namespace chessprobe::datagen
