#include "cluetree/token.hpp"

#include <algorithm>
#include <cctype>

#include "cluetree/errors.hpp"

namespace cluetree {
namespace {

bool is_ws(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v'; }

}  // namespace

char sense_symbol(SenseClass c) { return c == SenseClass::Discourse ? 'D' : 'S'; }

SenseClass sense_from_symbol(std::string_view s) {
  if (s == "D") return SenseClass::Discourse;
  if (s == "S") return SenseClass::Sentential;
  throw Error("unknown class symbol '" + std::string(s) + "' (expected D or S)");
}

std::size_t position_index(int position) {
  if (!is_valid_position(position)) {
    throw Error("position " + std::to_string(position) + " out of range [-1,4]");
  }
  return static_cast<std::size_t>(position + 1);
}

bool is_special_symbol(std::string_view s) {
  return s == kPeriod || s == kComma || s == kApostropheS || s == kNone;
}

// Angle brackets are reserved for the special symbols; braces and parens
// would collide with the tree grammar.
bool is_reserved_char(char c) {
  return c == '<' || c == '>' || c == '{' || c == '}' || c == '(' || c == ')';
}

bool is_normalized_token(std::string_view s) {
  if (s.empty()) return false;
  if (is_special_symbol(s)) return true;
  for (char c : s) {
    if (is_ws(c)) return false;
    if (c >= 'A' && c <= 'Z') return false;
    if (is_reserved_char(c)) return false;
  }
  return true;
}

Token normalize_token(std::string_view raw) {
  std::size_t begin = 0, end = raw.size();
  while (begin < end && is_ws(raw[begin])) ++begin;
  while (end > begin && is_ws(raw[end - 1])) --end;
  if (begin == end) throw NormalizeError("empty token");

  Token out;
  out.reserve(end - begin);
  for (std::size_t i = begin; i < end; ++i) {
    char c = raw[i];
    if (is_ws(c)) throw NormalizeError("whitespace inside token '" + std::string(raw) + "'");
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    out.push_back(c);
  }

  if (out == ".") return Token(kPeriod);
  if (out == ",") return Token(kComma);
  if (out == "'s") return Token(kApostropheS);
  if (is_special_symbol(out)) return out;
  for (char c : out) {
    if (is_reserved_char(c)) {
      throw NormalizeError("reserved character '" + std::string(1, c) + "' in token '" + out + "'");
    }
  }
  return out;
}

const std::array<Token, 34>& clue_words() {
  static const std::array<Token, 34> words = {
      "actually", "also",     "although",  "and",       "anyway",  "basically",
      "because",  "but",      "except",    "finally",   "first",   "further",
      "generally", "however", "indeed",    "like",      "look",    "next",
      "no",       "now",      "ok",        "or",        "otherwise", "right",
      "say",      "second",   "see",       "similarly", "since",   "so",
      "then",     "therefore", "well",     "yes"};
  return words;
}

bool is_clue_word(std::string_view token) {
  const auto& words = clue_words();
  return std::binary_search(words.begin(), words.end(), token);
}

}  // namespace cluetree
