#pragma once

// Shared helpers for the test suites. The oracle_* functions re-implement
// behavior independently of the library so tests can cross-check results;
// keep them free of calls into the code paths they are used to verify.

#include <cstdint>
#include <string>
#include <vector>

#include "cluetree/corpus.hpp"
#include "cluetree/ga.hpp"
#include "cluetree/rng.hpp"
#include "cluetree/token.hpp"
#include "cluetree/tree.hpp"
#include "cluetree/vocabulary.hpp"

namespace cluetree::test {

inline TrainingCase mk(char cls, const Token& m1, const Token& w0, const Token& p1,
                       const Token& p2 = "a", const Token& p3 = "the", const Token& p4 = "of") {
  TrainingCase c;
  c.sense = cls == 'D' ? SenseClass::Discourse : SenseClass::Sentential;
  c.at(-1) = m1;
  c.at(0) = w0;
  c.at(1) = p1;
  c.at(2) = p2;
  c.at(3) = p3;
  c.at(4) = p4;
  return c;
}

// Hand-rolled traversal, written directly from the leftmost-match rule.
inline SenseClass oracle_classify(const DecisionTree& t, const TrainingCase& c) {
  if (t.is_leaf()) return t.leaf_sense();
  const Token& tok = c.at(t.position());
  for (const Arc& a : t.arcs()) {
    bool found = false;
    for (const Token& at : a.tokens) {
      if (at == tok) found = true;
    }
    if (found) return oracle_classify(*a.child, c);
  }
  return oracle_classify(t.fallback(), c);
}

inline std::size_t oracle_correct_count(const DecisionTree& t, const Corpus& cases) {
  std::size_t n = 0;
  for (const TrainingCase& c : cases) {
    if (oracle_classify(t, c) == c.sense) ++n;
  }
  return n;
}

// Small random corpus for property tests: clue words at position 0, a
// fixed word list elsewhere.
inline Corpus random_corpus(Rng& rng, std::size_t n) {
  static const std::vector<Token> words = {"a",  "and", "to",  "the", "is",
                                           "we", "i",   Token(kPeriod), Token(kComma)};
  static const std::vector<Token> clues = {"and", "say", "now", "so", "but"};
  Corpus corpus;
  for (std::size_t k = 0; k < n; ++k) {
    TrainingCase c;
    c.sense = rng.below(2) == 0 ? SenseClass::Discourse : SenseClass::Sentential;
    for (int p : kPositions) {
      c.at(p) = p == 0 ? clues[rng.below(clues.size())] : words[rng.below(words.size())];
    }
    corpus.cases.push_back(std::move(c));
  }
  return corpus;
}

inline Vocabulary random_corpus_vocab() {
  Vocabulary v;
  v.general = {Token(kComma), Token(kPeriod), "a", "and", "i", "is", "the", "to", "we"};
  v.clue = {"and", "but", "now", "say", "so"};
  return v;
}

}  // namespace cluetree::test
