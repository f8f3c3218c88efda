#include "chessprobe/datagen/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <istream>
#include <ostream>
#include <unordered_set>

#include "chessprobe/chess/movegen.hpp"
#include "chessprobe/error.hpp"
#include "chessprobe/notation/moves.hpp"
#include "chessprobe/random.hpp"

namespace chessprobe::datagen {

std::string game_id(std::span<const chess::Move> moves) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(notation::uci_join(moves))));
  return buf;
}

namespace {

struct PendingGame {
  bool has_content = false;
  bool has_moves = false;
  bool custom_start = false;
  std::string variant;
  std::vector<std::string> san;
};

bool is_result(std::string_view token) {
  return token == "1-0" || token == "0-1" || token == "1/2-1/2" || token == "*";
}

// Strips a leading move number ("12." / "12..."), possibly glued to the move.
std::string_view strip_move_number(std::string_view token) {
  std::size_t i = 0;
  while (i < token.size() && std::isdigit(static_cast<unsigned char>(token[i]))) ++i;
  if (i > 0 && i < token.size() && token[i] == '.') {
    while (i < token.size() && token[i] == '.') ++i;
    return token.substr(i);
  }
  if (i == token.size()) return {};  // bare number
  while (!token.empty() && token.front() == '.') token.remove_prefix(1);
  return token;
}

class PgnReader {
 public:
  PgnReader(std::istream& in, std::string_view tag) : in_(in), tag_(tag) {}

  IngestResult run() {
    int c;
    bool line_start = true;
    while ((c = in_.get()) != EOF) {
      const char ch = static_cast<char>(c);
      if (line_start && ch == '%') {
        skip_line();
        continue;
      }
      line_start = ch == '\n';
      if (std::isspace(static_cast<unsigned char>(ch))) {
        flush_word();
        continue;
      }
      switch (ch) {
        case '[':
          flush_word();
          if (pending_.has_moves) finish_game();
          read_tag();
          break;
        case '{':
          flush_word();
          skip_until('}');
          break;
        case ';':
          flush_word();
          skip_line();
          line_start = true;
          break;
        case '(':
          flush_word();
          skip_variation();
          break;
        case ')':
          flush_word();
          break;
        default:
          word_.push_back(ch);
      }
    }
    flush_word();
    finish_game();
    return std::move(result_);
  }

 private:
  void skip_line() {
    int c;
    while ((c = in_.get()) != EOF && c != '\n') {
    }
  }

  void skip_until(char close) {
    int c;
    while ((c = in_.get()) != EOF && c != close) {
    }
  }

  void skip_variation() {
    int depth = 1;
    int c;
    while (depth > 0 && (c = in_.get()) != EOF) {
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (c == '{') skip_until('}');
    }
  }

  void read_tag() {
    std::string name;
    std::string value;
    int c;
    while ((c = in_.get()) != EOF && std::isspace(c)) {
    }
    while (c != EOF && !std::isspace(c) && c != '"' && c != ']') {
      name.push_back(static_cast<char>(c));
      c = in_.get();
    }
    while (c != EOF && c != '"' && c != ']') c = in_.get();
    if (c == '"') {
      while ((c = in_.get()) != EOF && c != '"') {
        if (c == '\\') c = in_.get();
        if (c != EOF) value.push_back(static_cast<char>(c));
      }
      while (c != EOF && c != ']') c = in_.get();
    }
    pending_.has_content = true;
    if (name == "FEN" || (name == "SetUp" && value == "1")) pending_.custom_start = true;
    if (name == "Variant") pending_.variant = value;
  }

  void flush_word() {
    if (word_.empty()) return;
    std::string_view token = word_;
    if (token.front() == '$') {
      word_.clear();
      return;
    }
    if (is_result(token)) {
      word_.clear();
      pending_.has_content = true;
      finish_game();
      return;
    }
    token = strip_move_number(token);
    if (!token.empty()) {
      pending_.san.emplace_back(token);
      pending_.has_content = pending_.has_moves = true;
    }
    word_.clear();
  }

  void finish_game() {
    if (!pending_.has_content) return;
    ++game_number_;
    const std::string source = tag_ + "#" + std::to_string(game_number_);
    PendingGame game = std::move(pending_);
    pending_ = PendingGame{};

    std::string variant = game.variant;
    std::transform(variant.begin(), variant.end(), variant.begin(),
                   [](unsigned char ch) { return std::tolower(ch); });
    if (!variant.empty() && variant != "standard" && variant != "chess") {
      result_.skipped.push_back({source, "variant '" + game.variant + "' is not standard chess"});
      return;
    }
    if (game.custom_start) {
      result_.skipped.push_back({source, "game does not start from the standard position"});
      return;
    }
    GameRecord record;
    record.source = source;
    chess::Board board = chess::Board::initial();
    for (std::size_t i = 0; i < game.san.size(); ++i) {
      try {
        const chess::Move m = notation::san_parse(board, game.san[i]);
        board = chess::apply_pseudo_legal(board, m);
        record.moves.push_back(m);
      } catch (const Error& e) {
        result_.skipped.push_back({source, "ply " + std::to_string(i + 1) + ": " + e.what()});
        return;
      }
    }
    record.id = game_id(record.moves);
    result_.games.push_back(std::move(record));
  }

  std::istream& in_;
  std::string tag_;
  std::string word_;
  PendingGame pending_;
  int game_number_ = 0;
  IngestResult result_;
};

}  // namespace

IngestResult ingest_pgn(std::istream& in, std::string_view source_tag) {
  // Skip a UTF-8 byte-order mark.
  if (in.peek() == 0xEF) {
    char bom[3];
    in.read(bom, 3);
    if (!(static_cast<unsigned char>(bom[1]) == 0xBB && static_cast<unsigned char>(bom[2]) == 0xBF)) {
      in.seekg(0);
    }
  }
  return PgnReader(in, source_tag).run();
}

FilterResult filter_and_dedupe(std::vector<GameRecord> games, LengthLimits limits) {
  FilterResult out;
  out.stats.input = games.size();
  std::unordered_set<std::string> seen_ids;
  for (GameRecord& g : games) {
    if (g.moves.size() < limits.min_plies) {
      ++out.stats.too_short;
    } else if (g.moves.size() > limits.max_plies) {
      ++out.stats.too_long;
    } else if (!seen_ids.insert(g.id).second) {
      // Equal ids mean equal UCI strings up to a 64-bit hash collision.
      ++out.stats.duplicate;
    } else {
      out.games.push_back(std::move(g));
    }
  }
  std::stable_sort(out.games.begin(), out.games.end(),
                   [](const GameRecord& a, const GameRecord& b) { return a.id < b.id; });
  out.stats.kept = out.games.size();
  return out;
}

void write_corpus(std::ostream& out, std::span<const GameRecord> games) {
  for (const GameRecord& g : games) {
    out << g.id << '\t' << g.source << '\t' << notation::uci_join(g.moves) << '\n';
  }
}

std::vector<GameRecord> read_corpus(std::istream& in) {
  std::vector<GameRecord> games;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab1 = line.find('\t');
    const auto tab2 = tab1 == std::string::npos ? std::string::npos : line.find('\t', tab1 + 1);
    if (tab2 == std::string::npos) {
      throw Error(ErrorCode::MalformedRecord, "corpus line " + std::to_string(line_number) + ": expected 3 fields");
    }
    GameRecord g;
    g.id = line.substr(0, tab1);
    g.source = line.substr(tab1 + 1, tab2 - tab1 - 1);
    try {
      g.moves = notation::uci_split(std::string_view(line).substr(tab2 + 1));
    } catch (const Error& e) {
      throw Error(ErrorCode::MalformedRecord, "corpus line " + std::to_string(line_number) + ": " + e.what());
    }
    games.push_back(std::move(g));
  }
  return games;
}

}  // namespace chessprobe::datagen
