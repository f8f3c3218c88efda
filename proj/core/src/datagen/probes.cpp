#include "chessprobe/datagen/probes.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <tuple>

#include "chessprobe/chess/movegen.hpp"
#include "chessprobe/error.hpp"
#include "chessprobe/notation/moves.hpp"
#include "chessprobe/notation/tokenize.hpp"
#include "chessprobe/random.hpp"

namespace chessprobe::datagen {

using chess::Board;
using chess::Move;
using chess::PieceType;
using chess::Square;
using chess::SquareSet;
using notation::Token;

std::string_view to_string(ProbeKind kind) {
  switch (kind) {
    case ProbeKind::EndActual: return "End-Actual";
    case ProbeKind::EndOther: return "End-Other";
    case ProbeKind::StartActual: return "Start-Actual";
    case ProbeKind::StartOther: return "Start-Other";
  }
  return "?";
}

std::optional<ProbeKind> probe_kind_from_string(std::string_view text) {
  for (ProbeKind k : kAllProbeKinds) {
    if (to_string(k) == text) return k;
  }
  return std::nullopt;
}

namespace {

std::string_view short_code(ProbeKind kind) {
  switch (kind) {
    case ProbeKind::EndActual: return "EA";
    case ProbeKind::EndOther: return "EO";
    case ProbeKind::StartActual: return "SA";
    case ProbeKind::StartOther: return "SO";
  }
  return "?";
}

Board replay(std::span<const Move> moves) {
  Board b = Board::initial();
  for (const Move& m : moves) b = chess::apply_move(b, m);
  return b;
}

[[noreturn]] void invalid(const ProbeInstance& p, const std::string& why) {
  throw Error(ErrorCode::MalformedRecord, "probe " + p.id + ": " + why);
}

}  // namespace

std::string probe_id(std::string_view game_id, int prefix_len, ProbeKind kind) {
  return std::string(game_id) + "-" + std::to_string(prefix_len) + "-" + std::string(short_code(kind));
}

Board ProbeInstance::board() const { return replay(prefix); }

PieceType ProbeInstance::prompt_piece_type(const Board& b) const {
  if (auto t = prompt.as_piece_type()) return *t;
  if (auto s = prompt.as_square()) {
    if (auto piece = b.piece_at(*s)) return piece->type;
  }
  throw Error(ErrorCode::MalformedRecord, "probe " + id + ": prompt does not name a piece");
}

std::vector<Token> ProbeInstance::context_tokens() const {
  std::vector<Token> out{Token::bos()};
  auto body = notation::uci_tokens(prefix);
  out.insert(out.end(), body.begin(), body.end());
  out.push_back(prompt);
  return out;
}

TrainingPrefixIndex::TrainingPrefixIndex(std::span<const GameRecord> training_games) {
  games_.reserve(training_games.size());
  for (const GameRecord& g : training_games) games_.push_back(notation::uci_join(g.moves));
  std::sort(games_.begin(), games_.end());
}

bool TrainingPrefixIndex::seen(std::span<const Move> prefix) const {
  const std::string key = notation::uci_join(prefix);
  for (auto it = std::lower_bound(games_.begin(), games_.end(), key);
       it != games_.end() && it->starts_with(key); ++it) {
    // "e7e8" must not match a game continuing "e7e8q".
    if (it->size() == key.size() || (*it)[key.size()] == ' ' || key.empty()) return true;
  }
  return false;
}

SquareSet gold_answers(const Board& board, ProbeKind kind, Token prompt) {
  if (is_end_task(kind)) {
    auto square = prompt.as_square();
    if (!square) throw Error(ErrorCode::InvalidArgument, "ending-square probes need a square prompt");
    return chess::legal_destinations(board, *square);
  }
  auto type = prompt.as_piece_type();
  if (!type) throw Error(ErrorCode::InvalidArgument, "starting-square probes need a piece-type prompt");
  return chess::movable_squares_of_type(board, *type);
}

std::vector<ProbeInstance> build_probes(std::span<const GameRecord> pool, const TrainingPrefixIndex& training,
                                        const ProbeOptions& options) {
  if (options.count < 0 || options.prefix_min < 1 || options.prefix_max < options.prefix_min) {
    throw Error(ErrorCode::InvalidArgument, "probe count and prefix range must be positive and ordered");
  }
  std::vector<std::size_t> eligible;
  std::size_t pair_count = 0;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const int plies = static_cast<int>(pool[i].moves.size());
    if (plies >= options.prefix_min + 1) {
      eligible.push_back(i);
      pair_count += static_cast<std::size_t>(std::min(options.prefix_max, plies - 1) - options.prefix_min + 1);
    }
  }
  if (options.count > 0 && eligible.empty()) {
    throw Error(ErrorCode::ExhaustedPool, "no pool game is longer than the minimum prefix");
  }

  struct Accepted {
    std::size_t game;
    int prefix_len;
    Square other_square;
    PieceType other_type;
  };
  std::vector<Accepted> accepted;
  std::set<std::pair<std::size_t, int>> tried;
  Rng rng(options.seed);
  const std::size_t budget = 200 * static_cast<std::size_t>(options.count) + 10'000;
  std::size_t attempts = 0;

  while (static_cast<int>(accepted.size()) < options.count) {
    if (++attempts > budget || tried.size() == pair_count) {
      throw Error(ErrorCode::ExhaustedPool, "accepted " + std::to_string(accepted.size()) + " of " +
                                                std::to_string(options.count) + " pairs after " +
                                                std::to_string(attempts - 1) + " attempts");
    }
    const std::size_t game = eligible[rng.below(eligible.size())];
    const auto& moves = pool[game].moves;
    const int hi = std::min<int>(options.prefix_max, static_cast<int>(moves.size()) - 1);
    const int len = options.prefix_min + static_cast<int>(rng.below(static_cast<std::size_t>(hi - options.prefix_min + 1)));
    if (!tried.emplace(game, len).second) continue;

    const std::span<const Move> prefix(moves.data(), static_cast<std::size_t>(len));
    if (training.seen(prefix)) continue;
    const Board board = replay(prefix);
    const Move next = moves[static_cast<std::size_t>(len)];
    const PieceType actual_type = board.piece_at(next.from)->type;
    if (actual_type == PieceType::Pawn) continue;

    std::vector<Square> other_squares;
    std::set<PieceType> other_types;
    for (Square s : chess::movable_squares(board)) {
      const PieceType t = board.piece_at(s)->type;
      if (t == PieceType::Pawn) continue;
      if (s != next.from) other_squares.push_back(s);
      if (t != actual_type) other_types.insert(t);
    }
    if (other_squares.empty() || other_types.empty()) continue;
    const std::vector<PieceType> types(other_types.begin(), other_types.end());
    const Square other_square = other_squares[rng.below(other_squares.size())];
    const PieceType other_type = types[rng.below(types.size())];
    accepted.push_back({game, len, other_square, other_type});
  }

  std::sort(accepted.begin(), accepted.end(), [&](const Accepted& a, const Accepted& b) {
    return std::tie(pool[a.game].id, a.prefix_len) < std::tie(pool[b.game].id, b.prefix_len);
  });

  std::vector<ProbeInstance> out;
  out.reserve(accepted.size() * 4);
  for (const Accepted& a : accepted) {
    const GameRecord& g = pool[a.game];
    const std::vector<Move> prefix(g.moves.begin(), g.moves.begin() + a.prefix_len);
    const Board board = replay(prefix);
    const Move next = g.moves[static_cast<std::size_t>(a.prefix_len)];
    const PieceType actual_type = board.piece_at(next.from)->type;
    for (ProbeKind kind : kAllProbeKinds) {
      ProbeInstance p;
      p.id = probe_id(g.id, a.prefix_len, kind);
      p.game_id = g.id;
      p.kind = kind;
      p.prefix = prefix;
      switch (kind) {
        case ProbeKind::EndActual:
          p.prompt = Token::square(next.from);
          p.exm_gold = next.to;
          break;
        case ProbeKind::EndOther: p.prompt = Token::square(a.other_square); break;
        case ProbeKind::StartActual:
          p.prompt = Token::piece(actual_type);
          p.exm_gold = next.from;
          break;
        case ProbeKind::StartOther: p.prompt = Token::piece(a.other_type); break;
      }
      p.lgm_gold = gold_answers(board, kind, p.prompt);
      out.push_back(std::move(p));
    }
  }
  return out;
}

void validate_probe(const ProbeInstance& p, int prefix_min, int prefix_max) {
  if (p.prefix_len() < prefix_min || p.prefix_len() > prefix_max) invalid(p, "prefix length out of range");
  if (p.id != probe_id(p.game_id, p.prefix_len(), p.kind)) invalid(p, "id does not match game, length and kind");
  Board board;
  try {
    board = p.board();
  } catch (const Error&) {
    invalid(p, "prefix does not replay legally");
  }
  if (is_end_task(p.kind)) {
    auto s = p.prompt.as_square();
    if (!s) invalid(p, "prompt must be a square");
    auto piece = board.piece_at(*s);
    if (!piece || piece->color != board.side_to_move()) invalid(p, "prompt square lacks a piece of the side to move");
    if (piece->type == PieceType::Pawn) invalid(p, "prompt names a pawn");
  } else {
    auto t = p.prompt.as_piece_type();
    if (!t) invalid(p, "prompt must be a piece type");
    if (*t == PieceType::Pawn) invalid(p, "prompt names a pawn");
  }
  const SquareSet gold = gold_answers(board, p.kind, p.prompt);
  if (gold.empty()) invalid(p, "prompt has no legal answer");
  if (gold != p.lgm_gold) invalid(p, "stored legal set " + p.lgm_gold.to_string() + " differs from " + gold.to_string());
  if (is_actual_task(p.kind) != p.exm_gold.has_value()) invalid(p, "exact-move answer presence does not match kind");
  if (p.exm_gold && !p.lgm_gold.contains(*p.exm_gold)) invalid(p, "exact-move answer is not a legal answer");
}

std::map<ProbeKind, std::map<PieceType, int>> piece_type_counts(std::span<const ProbeInstance> probes) {
  std::map<ProbeKind, std::map<PieceType, int>> out;
  for (const ProbeInstance& p : probes) {
    ++out[p.kind][p.prompt_piece_type(p.board())];
  }
  return out;
}

void write_probes(std::ostream& out, std::span<const ProbeInstance> probes) {
  out << "# id\tkind\tprefix\tprompt\texm\tlgm\n";
  for (const ProbeInstance& p : probes) {
    out << p.id << '\t' << to_string(p.kind) << '\t' << notation::join_tokens(notation::uci_tokens(p.prefix))
        << '\t' << p.prompt.text() << '\t' << (p.exm_gold ? p.exm_gold->name() : "-") << '\t'
        << p.lgm_gold.to_string() << '\n';
  }
}

std::vector<ProbeInstance> read_probes(std::istream& in) {
  std::vector<ProbeInstance> out;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    auto fail = [&](const std::string& why) {
      return Error(ErrorCode::MalformedRecord, "probe line " + std::to_string(line_number) + ": " + why);
    };
    std::vector<std::string_view> fields;
    std::string_view rest = line;
    while (true) {
      const auto tab = rest.find('\t');
      fields.push_back(rest.substr(0, tab));
      if (tab == std::string_view::npos) break;
      rest.remove_prefix(tab + 1);
    }
    if (fields.size() != 6) throw fail("expected 6 tab-separated fields");

    ProbeInstance p;
    p.id = std::string(fields[0]);
    const auto dash = p.id.find('-');
    if (dash == std::string::npos) throw fail("id lacks a game id");
    p.game_id = p.id.substr(0, dash);
    auto kind = probe_kind_from_string(fields[1]);
    if (!kind) throw fail("unknown kind '" + std::string(fields[1]) + "'");
    p.kind = *kind;
    try {
      p.prefix = notation::detokenize(notation::parse_tokens(fields[2]));
    } catch (const Error& e) {
      throw fail(e.what());
    }
    auto prompt = Token::parse(fields[3]);
    if (!prompt) throw fail("unknown prompt token '" + std::string(fields[3]) + "'");
    p.prompt = *prompt;
    if (fields[4] != "-") {
      p.exm_gold = Square::parse(fields[4]);
      if (!p.exm_gold) throw fail("bad exm square");
    }
    std::string_view lgm = fields[5];
    while (!lgm.empty()) {
      const auto comma = lgm.find(',');
      auto s = Square::parse(lgm.substr(0, comma));
      if (!s) throw fail("bad lgm square");
      p.lgm_gold.insert(*s);
      if (comma == std::string_view::npos) break;
      lgm.remove_prefix(comma + 1);
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace chessprobe::datagen
