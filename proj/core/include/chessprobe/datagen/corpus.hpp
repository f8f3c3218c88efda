#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chessprobe/chess/types.hpp"

namespace chessprobe::datagen {

struct GameRecord {
  std::string id;  // game_id(moves)
  std::vector<chess::Move> moves;
  std::string source;
};

/// 16 lowercase hex digits of the FNV-1a hash of the space-joined UCI moves.
std::string game_id(std::span<const chess::Move> moves);

struct IngestDiagnostic {
  std::string source;
  std::string reason;
};

struct IngestResult {
  std::vector<GameRecord> games;
  std::vector<IngestDiagnostic> skipped;
};

/// Reads PGN (tag pairs + SAN movetext, any number of games). Comments,
/// variations, NAGs, move numbers and results are stripped; each game is
/// replayed with san_parse from the standard start. Games that fail to replay
/// or declare a non-standard start (FEN/SetUp tags) are skipped with a
/// diagnostic. Sources are tagged "<source_tag>#<game number>".
IngestResult ingest_pgn(std::istream& in, std::string_view source_tag);

struct LengthLimits {
  std::size_t min_plies = 10;
  std::size_t max_plies = 150;
};

struct FilterStats {
  std::size_t input = 0;
  std::size_t kept = 0;
  std::size_t too_short = 0;
  std::size_t too_long = 0;
  std::size_t duplicate = 0;
};

struct FilterResult {
  std::vector<GameRecord> games;
  FilterStats stats;
};

/// Length filter (plies, inclusive bounds), then removal of games whose UCI
/// move string repeats an earlier one; the survivors are sorted by id.
FilterResult filter_and_dedupe(std::vector<GameRecord> games, LengthLimits limits = {});

/// Corpus file: one game per line, "<id>\t<source>\t<uci moves>".
void write_corpus(std::ostream& out, std::span<const GameRecord> games);

/// Throws Error(MalformedRecord) naming the line on malformed input.
std::vector<GameRecord> read_corpus(std::istream& in);

}  // namespace chessprobe::datagen
