#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cluetree/corpus.hpp"
#include "cluetree/token.hpp"
#include "cluetree/vocabulary.hpp"

namespace cluetree {

class DecisionTree;

// One labeled branch of an internal node. Arc order matters: traversal
// takes the first (leftmost) arc whose token set contains the case's
// token, and token sets of sibling arcs may overlap.
struct Arc {
  std::vector<Token> tokens;
  std::unique_ptr<DecisionTree> child;

  Arc() = default;
  Arc(std::vector<Token> tokens, DecisionTree child);
  Arc(const Arc& other);
  Arc(Arc&&) noexcept = default;
  Arc& operator=(const Arc& other);
  Arc& operator=(Arc&&) noexcept = default;

  bool contains(const Token& t) const;
};

// A leaf carrying a sense class, or an internal node labeled with a
// context position, carrying ordered arcs plus the mandatory default arc
// (conceptually the rightmost one). Value type with deep copies.
class DecisionTree {
 public:
  DecisionTree() = default;

  static DecisionTree leaf(SenseClass sense);
  static DecisionTree node(int position, std::vector<Arc> arcs, DecisionTree fallback);

  DecisionTree(const DecisionTree& other);
  DecisionTree(DecisionTree&&) noexcept = default;
  DecisionTree& operator=(const DecisionTree& other);
  DecisionTree& operator=(DecisionTree&&) noexcept = default;

  bool is_leaf() const { return fallback_ == nullptr; }
  SenseClass leaf_sense() const;

  int position() const;
  const std::vector<Arc>& arcs() const;
  std::vector<Arc>& arcs();
  const DecisionTree& fallback() const;
  DecisionTree& fallback();

  // Leaves have depth 0; an internal node is one deeper than its deepest child.
  std::size_t depth() const;
  std::size_t node_count() const;

  friend bool operator==(const DecisionTree& a, const DecisionTree& b);

 private:
  SenseClass sense_ = SenseClass::Sentential;
  int position_ = 0;
  std::vector<Arc> arcs_;
  std::unique_ptr<DecisionTree> fallback_;  // null marks a leaf
};

// Deterministic traversal; total thanks to default arcs.
SenseClass classify(const DecisionTree& tree, const TrainingCase& c);

struct EvaluationReport {
  std::size_t correct = 0;
  std::size_t total = 0;

  double percent() const { return 100.0 * static_cast<double>(correct) / static_cast<double>(total); }
  // "813/1027 = 79.16%"
  std::string summary() const;

  bool operator==(const EvaluationReport&) const = default;
};

// Throws EvaluationError on an empty case list.
EvaluationReport evaluate(const DecisionTree& tree, const Corpus& cases);

// The fixed manually designed tree: discourse exactly when position -1
// holds <period> or <comma>, sentential otherwise.
DecisionTree hl_baseline_tree();

struct TreeLimits {
  std::size_t max_depth = 6;
  std::size_t max_arcs = 8;
  std::size_t max_tokens_per_arc = 8;
};

struct ValidationIssue {
  std::string path;  // e.g. "root.default.arc[1]"
  std::string message;
};

// Accepts iff every arc's token set is nonempty, within limits, and drawn
// from the vocabulary partition matching its node's position, and the tree
// respects the depth bound. Returns the first violation found, if any.
std::optional<ValidationIssue> validate_tree(const DecisionTree& tree, const Vocabulary& vocab,
                                             const TreeLimits& limits = {});

// Canonical single-space s-expression form, e.g.
//   (node -1 (arc {<period> <comma>} (leaf D)) (default (leaf S)))
std::string serialize_tree(const DecisionTree& tree);

// Strict parser for the canonical form; errors carry a byte offset.
DecisionTree parse_tree(std::string_view text);

}  // namespace cluetree
