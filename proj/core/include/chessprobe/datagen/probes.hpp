#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chessprobe/chess/board.hpp"
#include "chessprobe/chess/types.hpp"
#include "chessprobe/datagen/corpus.hpp"
#include "chessprobe/notation/vocabulary.hpp"

namespace chessprobe::datagen {

enum class ProbeKind { EndActual, EndOther, StartActual, StartOther };

inline constexpr std::array<ProbeKind, 4> kAllProbeKinds = {ProbeKind::EndActual, ProbeKind::EndOther,
                                                            ProbeKind::StartActual, ProbeKind::StartOther};

/// "End-Actual", "End-Other", "Start-Actual", "Start-Other".
std::string_view to_string(ProbeKind kind);
std::optional<ProbeKind> probe_kind_from_string(std::string_view text);

constexpr bool is_end_task(ProbeKind k) { return k == ProbeKind::EndActual || k == ProbeKind::EndOther; }
constexpr bool is_actual_task(ProbeKind k) { return k == ProbeKind::EndActual || k == ProbeKind::StartActual; }

// A game prefix followed by one prompt token. End-* prompts are the starting
// square of a movable non-pawn piece and the gold answers are its legal
// destinations; Start-* prompts are a piece type and the gold answers are the
// squares of its legally movable pieces.
struct ProbeInstance {
  std::string id;  // "<game id>-<prefix plies>-<EA|EO|SA|SO>"
  std::string game_id;
  ProbeKind kind = ProbeKind::EndActual;
  std::vector<chess::Move> prefix;
  notation::Token prompt;
  std::optional<chess::Square> exm_gold;  // Actual kinds only
  chess::SquareSet lgm_gold;

  int prefix_len() const { return static_cast<int>(prefix.size()); }

  /// Position after the prefix.
  chess::Board board() const;

  /// The piece type the prompt refers to (moving piece for End-*, prompt for Start-*).
  chess::PieceType prompt_piece_type(const chess::Board& board) const;

  /// Tokens a predictor conditions on: BOS, plain UCI prefix tokens, prompt.
  std::vector<notation::Token> context_tokens() const;
};

std::string probe_id(std::string_view game_id, int prefix_len, ProbeKind kind);

struct ProbeOptions {
  int count = 1000;  // (game, prefix) pairs; each yields one probe per kind
  int prefix_min = 51;
  int prefix_max = 100;
  std::uint64_t seed = 0;
};

// Answers "is this move prefix also a prefix of some training game?" by binary
// search over the sorted UCI strings of the training games.
class TrainingPrefixIndex {
 public:
  TrainingPrefixIndex() = default;
  explicit TrainingPrefixIndex(std::span<const GameRecord> training_games);

  bool seen(std::span<const chess::Move> prefix) const;
  std::size_t size() const { return games_.size(); }

 private:
  std::vector<std::string> games_;
};

/// Gold sets for one (prefix board, kind, prompt) triple, computed from the rules.
chess::SquareSet gold_answers(const chess::Board& board, ProbeKind kind, notation::Token prompt);

/// Samples `options.count` distinct (game, prefix length) pairs from `pool`
/// and emits four probes per pair, sorted by (game id, prefix length, kind).
/// The prefix length is uniform in [prefix_min, min(prefix_max, plies - 1)];
/// pairs are resampled when the next move is a pawn move, the prefix appears in
/// training, or no non-pawn alternative exists for the Other kinds. Throws
/// Error(ExhaustedPool) when the attempt budget runs out.
std::vector<ProbeInstance> build_probes(std::span<const GameRecord> pool, const TrainingPrefixIndex& training,
                                        const ProbeOptions& options);

/// Recomputes the gold sets from the replayed prefix and checks every probe
/// invariant; throws Error(MalformedRecord) describing the first violation.
void validate_probe(const ProbeInstance& probe, int prefix_min = 1, int prefix_max = 1 << 30);

/// Prompt piece-type counts per kind (the layout of a piece-type count table).
std::map<ProbeKind, std::map<chess::PieceType, int>> piece_type_counts(std::span<const ProbeInstance> probes);

/// Probe file: a "#" header line, then one tab-separated record per probe:
///   id  kind  prefix  prompt  exm  lgm
/// prefix is space-separated UCI tokens, exm is a square or "-", lgm is
/// comma-separated squares.
void write_probes(std::ostream& out, std::span<const ProbeInstance> probes);

/// Throws Error(MalformedRecord) naming the line on malformed input.
std::vector<ProbeInstance> read_probes(std::istream& in);

}  // namespace chessprobe::datagen
