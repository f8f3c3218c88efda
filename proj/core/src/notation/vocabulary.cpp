#include "chessprobe/notation/vocabulary.hpp"

#include <istream>
#include <ostream>
#include <unordered_map>

#include "chessprobe/error.hpp"

namespace chessprobe::notation {

namespace {

constexpr int kFirstPiece = 64;
constexpr int kFirstPromotion = 70;
constexpr int kFirstSpecial = 74;

constexpr std::array<chess::PieceType, 4> kPromotionOrder = {
    chess::PieceType::Queen, chess::PieceType::Rook, chess::PieceType::Bishop,
    chess::PieceType::Knight};

struct TextTable {
  std::array<std::string, Token::kVocabularySize> text;

  TextTable() {
    for (int file = 0; file < 8; ++file) {
      for (int rank = 0; rank < 8; ++rank) text[file * 8 + rank] = chess::Square(file, rank).name();
    }
    for (chess::PieceType t : chess::kAllPieceTypes) {
      text[kFirstPiece + chess::index_of(t)] = std::string(1, chess::piece_letter(t));
    }
    for (std::size_t i = 0; i < kPromotionOrder.size(); ++i) {
      text[kFirstPromotion + i] =
          std::string(1, static_cast<char>(chess::piece_letter(kPromotionOrder[i]) - 'A' + 'a'));
    }
    text[kFirstSpecial] = "BOS";
    text[kFirstSpecial + 1] = "EOS";
    text[kFirstSpecial + 2] = "PAD";
  }
};

const TextTable& text_table() {
  static const TextTable kTable;
  return kTable;
}

}  // namespace

Token Token::square(chess::Square s) { return Token(s.file() * 8 + s.rank()); }

Token Token::piece(chess::PieceType t) { return Token(kFirstPiece + chess::index_of(t)); }

Token Token::promotion(chess::PieceType t) {
  for (std::size_t i = 0; i < kPromotionOrder.size(); ++i) {
    if (kPromotionOrder[i] == t) return Token(kFirstPromotion + static_cast<int>(i));
  }
  throw Error(ErrorCode::InvalidArgument, "no promotion token for this piece type");
}

std::optional<Token> Token::parse(std::string_view text) {
  static const auto kIndex = [] {
    std::unordered_map<std::string_view, int> index;
    const auto& table = text_table().text;
    for (int id = 0; id < kVocabularySize; ++id) index.emplace(table[id], id);
    return index;
  }();
  auto it = kIndex.find(text);
  if (it == kIndex.end()) return std::nullopt;
  return Token(it->second);
}

Token Token::from_id(int id) {
  if (id < 0 || id >= kVocabularySize) {
    throw Error(ErrorCode::UnknownToken, "token id " + std::to_string(id) + " out of range");
  }
  return Token(id);
}

TokenClass Token::token_class() const {
  if (id_ < kFirstPiece) return TokenClass::Square;
  if (id_ < kFirstPromotion) return TokenClass::PieceType;
  if (id_ < kFirstSpecial) return TokenClass::Promotion;
  return TokenClass::Special;
}

std::string_view Token::text() const { return text_table().text[id_]; }

std::optional<chess::Square> Token::as_square() const {
  if (token_class() != TokenClass::Square) return std::nullopt;
  return chess::Square(id_ / 8, id_ % 8);
}

std::optional<chess::PieceType> Token::as_piece_type() const {
  if (token_class() != TokenClass::PieceType) return std::nullopt;
  return static_cast<chess::PieceType>(id_ - kFirstPiece);
}

std::optional<chess::PieceType> Token::as_promotion() const {
  if (token_class() != TokenClass::Promotion) return std::nullopt;
  return kPromotionOrder[id_ - kFirstPromotion];
}

const std::array<Token, Token::kVocabularySize>& vocabulary() {
  static const auto kVocabulary = [] {
    std::array<Token, Token::kVocabularySize> v{};
    for (int id = 0; id < Token::kVocabularySize; ++id) v[id] = Token::from_id(id);
    return v;
  }();
  return kVocabulary;
}

void write_vocabulary(std::ostream& out) {
  for (Token t : vocabulary()) out << t.text() << '\n';
}

void verify_vocabulary(std::istream& in) {
  std::string line;
  int index = 0;
  while (std::getline(in, line)) {
    if (index >= Token::kVocabularySize || line != Token::from_id(index).text()) {
      throw Error(ErrorCode::UnknownToken, "vocabulary line " + std::to_string(index + 1) + ": '" +
                                               line + "' does not match the built-in vocabulary");
    }
    ++index;
  }
  if (index != Token::kVocabularySize) {
    throw Error(ErrorCode::UnknownToken, "vocabulary has " + std::to_string(index) + " entries, expected 77");
  }
}

std::string join_tokens(std::span<const Token> tokens) {
  std::string out;
  for (Token t : tokens) {
    if (!out.empty()) out.push_back(' ');
    out += t.text();
  }
  return out;
}

std::vector<Token> parse_tokens(std::string_view line) {
  std::vector<Token> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r') ++end;
    if (end > pos) {
      std::string_view word = line.substr(pos, end - pos);
      auto token = Token::parse(word);
      if (!token) throw Error(ErrorCode::UnknownToken, "'" + std::string(word) + "'");
      out.push_back(*token);
    }
    pos = end;
  }
  return out;
}

}  // namespace chessprobe::notation
