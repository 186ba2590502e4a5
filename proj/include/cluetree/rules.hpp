#pragma once

#include <string>
#include <vector>

#include "cluetree/corpus.hpp"
#include "cluetree/token.hpp"
#include "cluetree/tree.hpp"

namespace cluetree {

// One step of a root-to-leaf path: the tested position, plus either the
// matched arc's token set or the default arc.
struct RuleCondition {
  int position = 0;
  std::vector<Token> tokens;
  bool is_default = false;

  bool operator==(const RuleCondition&) const = default;
};

// A root-to-leaf path together with the partition of cases it captured.
struct Rule {
  std::vector<RuleCondition> path;
  SenseClass predicted = SenseClass::Sentential;
  std::size_t matched = 0;
  std::size_t correct = 0;
  std::vector<Token> word_scope;  // sorted clue words the rule fired for
};

// Rendering of the rule's decisive condition: the arc leading into its
// leaf, e.g. "-1={<period> <comma>}", or "DEFAULT" when the leaf hangs off
// a default arc (or the tree is a bare leaf).
std::string condition_text(const Rule& rule);

// One rule per root-to-leaf path, in depth-first left-to-right order (the
// order in which paths are considered during traversal). Matched counts
// partition the corpus: they sum to its size, and correct counts sum to
// evaluate().correct.
std::vector<Rule> extract_rules(const DecisionTree& tree, const Corpus& cases);

struct PerWordRules {
  std::vector<Rule> rules;
  EvaluationReport overall;
};

// Projects the tree onto the cases whose clue word is `word`: rules are the
// paths at least one such case traverses, in traversal order, with counts
// restricted to the slice.
PerWordRules per_word_rules(const DecisionTree& tree, const Token& word, const Corpus& cases);

// Pools per-word rules that share the same decisive condition and
// prediction across clue words; counts are summed and word_scope lists the
// words. Sorted by descending matched count.
std::vector<Rule> generalized_rules(const DecisionTree& tree, const Corpus& cases);

enum class RuleScope { AllCases, SingleWord, Generalized };

// TSV export: scope, index, condition, predicted, matched, correct,
// accuracy. Scope is "*", the word, or a '+'-joined word list.
std::string export_rules_tsv(const std::vector<Rule>& rules, RuleScope scope);

}  // namespace cluetree
