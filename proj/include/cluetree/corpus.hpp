#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cluetree/token.hpp"

namespace cluetree {

// One clue-word occurrence: its sense plus a token for each of the six
// context positions. Position 0 always holds one of the 34 clue words.
struct TrainingCase {
  SenseClass sense = SenseClass::Sentential;
  std::array<Token, kPositionCount> context{};

  const Token& at(int position) const { return context[position_index(position)]; }
  Token& at(int position) { return context[position_index(position)]; }

  bool operator==(const TrainingCase&) const = default;
};

// Validated construction: every token must be in normalized form and the
// position-0 token must be a clue word.
TrainingCase make_training_case(SenseClass sense, const std::array<Token, kPositionCount>& context);

struct Corpus {
  std::vector<TrainingCase> cases;

  std::size_t size() const { return cases.size(); }
  bool empty() const { return cases.empty(); }
  const TrainingCase& operator[](std::size_t i) const { return cases[i]; }

  auto begin() const { return cases.begin(); }
  auto end() const { return cases.end(); }

  std::size_t count_discourse() const;
};

// One case per line: class, then the six tokens, tab-separated. Fields are
// run through normalize_token so raw (mixed-case, punctuation) text parses.
// Lines starting with '#' and blank lines are skipped. Errors carry the
// 1-based line number.
Corpus parse_corpus(std::istream& in);
Corpus parse_corpus_text(std::string_view text);

// Canonical form: normalized fields, single tabs, trailing newline.
std::string serialize_corpus(const Corpus& corpus);

// Deterministic random half split: ceil(n/2) train cases, the rest test.
// Both halves preserve the corpus-relative order of their cases.
std::pair<Corpus, Corpus> split_corpus(const Corpus& corpus, std::uint64_t seed);

}  // namespace cluetree
