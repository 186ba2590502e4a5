#pragma once

#include <optional>

#include "cluetree/corpus.hpp"
#include "cluetree/tree.hpp"
#include "cluetree/vocabulary.hpp"

namespace cluetree {

struct TopDownParams {
  std::size_t min_cases_per_split = 10;
  std::size_t max_depth = 6;
  double min_gain = 0.0;  // bits; a split must strictly improve on this
};

// Binary Shannon entropy of the class distribution, in bits.
double entropy(const Corpus& cases);

struct SplitChoice {
  int position = 0;
  Token token;
  double gain = 0.0;
};

// Maximizes information gain over all (position, vocabulary token) binary
// tests. Ties break toward the smaller position index, then the
// lexicographically smaller token. Returns nothing when no test strictly
// clears min_gain or the case set is below min_cases_per_split.
std::optional<SplitChoice> best_split(const Corpus& cases, const Vocabulary& vocab,
                                      const TopDownParams& params);

// Greedy recursive partitioning in the shared tree formalism: each chosen
// test becomes a node with one single-token arc plus the default arc.
// Recursion stops at pure nodes, the depth bound, the case-count bound, or
// no remaining gain, emitting a majority-class leaf (ties to Sentential).
DecisionTree induce_topdown(const Corpus& train, const Vocabulary& vocab,
                            const TopDownParams& params = {});

}  // namespace cluetree
