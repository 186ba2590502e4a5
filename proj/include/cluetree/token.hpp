#pragma once

#include <array>
#include <string>
#include <string_view>

namespace cluetree {

// A normalized token occupying one context slot: a lowercase word, or one
// of the spelled-out punctuation symbols, or the boundary sentinel.
using Token = std::string;

inline constexpr std::string_view kPeriod = "<period>";
inline constexpr std::string_view kComma = "<comma>";
inline constexpr std::string_view kApostropheS = "<apostrophe-s>";
inline constexpr std::string_view kNone = "<none>";

enum class SenseClass : unsigned char { Discourse, Sentential };

char sense_symbol(SenseClass c);

// Accepts exactly "D" or "S"; anything else throws Error.
SenseClass sense_from_symbol(std::string_view s);

// Context positions relative to the clue word: one slot to its left, the
// word itself, and four slots to its right.
inline constexpr std::array<int, 6> kPositions{-1, 0, 1, 2, 3, 4};
inline constexpr std::size_t kPositionCount = kPositions.size();

constexpr bool is_valid_position(int position) { return position >= -1 && position <= 4; }

// Maps -1..4 onto 0..5. Throws Error for anything else.
std::size_t position_index(int position);

bool is_special_symbol(std::string_view s);

// True when `s` is already in normalized form (what normalize_token emits).
bool is_normalized_token(std::string_view s);

// Trims surrounding whitespace, lowercases ASCII letters, and rewrites the
// literal punctuation strings "." / "," / "'s" to their symbols. Inflection
// is preserved; there is no stemming. Throws NormalizeError for empty
// input, internal whitespace, or a reserved <...> form that is not one of
// the four known symbols.
Token normalize_token(std::string_view raw);

// The 34 clue words, sorted. Every training case carries one of these at
// position 0.
const std::array<Token, 34>& clue_words();

bool is_clue_word(std::string_view token);

}  // namespace cluetree
