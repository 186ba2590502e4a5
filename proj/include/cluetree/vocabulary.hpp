#pragma once

#include <cstddef>
#include <vector>

#include "cluetree/corpus.hpp"
#include "cluetree/token.hpp"

namespace cluetree {

struct VocabularyConfig {
  // Tokens must occur strictly more often than the threshold to qualify.
  std::size_t general_threshold = 15;
  std::size_t clue_threshold = 4;
};

// The two threshold-filtered token sets: `general` feeds arcs under every
// position except 0, `clue` feeds arcs under position 0. Both are sorted.
struct Vocabulary {
  std::vector<Token> general;
  std::vector<Token> clue;

  bool general_contains(const Token& t) const;
  bool clue_contains(const Token& t) const;
  const std::vector<Token>& partition(int position) const { return position == 0 ? clue : general; }
};

// Counts pool across the five non-zero positions for `general`; position 0
// alone feeds `clue`. Throws VocabularyError on an empty training corpus.
Vocabulary build_vocabulary(const Corpus& train, const VocabularyConfig& cfg = {});

}  // namespace cluetree
