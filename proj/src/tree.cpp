#include "cluetree/tree.hpp"

#include <algorithm>
#include <charconv>

#include "cluetree/errors.hpp"
#include "cluetree/format.hpp"

namespace cluetree {

Arc::Arc(std::vector<Token> tokens, DecisionTree child)
    : tokens(std::move(tokens)), child(std::make_unique<DecisionTree>(std::move(child))) {}

Arc::Arc(const Arc& other)
    : tokens(other.tokens), child(other.child ? std::make_unique<DecisionTree>(*other.child) : nullptr) {}

Arc& Arc::operator=(const Arc& other) {
  if (this != &other) {
    tokens = other.tokens;
    child = other.child ? std::make_unique<DecisionTree>(*other.child) : nullptr;
  }
  return *this;
}

bool Arc::contains(const Token& t) const {
  return std::find(tokens.begin(), tokens.end(), t) != tokens.end();
}

DecisionTree DecisionTree::leaf(SenseClass sense) {
  DecisionTree t;
  t.sense_ = sense;
  return t;
}

DecisionTree DecisionTree::node(int position, std::vector<Arc> arcs, DecisionTree fallback) {
  if (!is_valid_position(position)) {
    throw Error("invalid node position " + std::to_string(position));
  }
  if (arcs.empty()) throw Error("internal node needs at least one non-default arc");
  for (const Arc& a : arcs) {
    if (a.tokens.empty()) throw Error("arc with empty token set");
    if (!a.child) throw Error("arc without child");
  }
  DecisionTree t;
  t.position_ = position;
  t.arcs_ = std::move(arcs);
  t.fallback_ = std::make_unique<DecisionTree>(std::move(fallback));
  return t;
}

DecisionTree::DecisionTree(const DecisionTree& other)
    : sense_(other.sense_),
      position_(other.position_),
      arcs_(other.arcs_),
      fallback_(other.fallback_ ? std::make_unique<DecisionTree>(*other.fallback_) : nullptr) {}

DecisionTree& DecisionTree::operator=(const DecisionTree& other) {
  if (this != &other) {
    sense_ = other.sense_;
    position_ = other.position_;
    arcs_ = other.arcs_;
    fallback_ = other.fallback_ ? std::make_unique<DecisionTree>(*other.fallback_) : nullptr;
  }
  return *this;
}

SenseClass DecisionTree::leaf_sense() const {
  if (!is_leaf()) throw Error("leaf_sense() on an internal node");
  return sense_;
}

int DecisionTree::position() const {
  if (is_leaf()) throw Error("position() on a leaf");
  return position_;
}

const std::vector<Arc>& DecisionTree::arcs() const {
  if (is_leaf()) throw Error("arcs() on a leaf");
  return arcs_;
}

std::vector<Arc>& DecisionTree::arcs() {
  if (is_leaf()) throw Error("arcs() on a leaf");
  return arcs_;
}

const DecisionTree& DecisionTree::fallback() const {
  if (is_leaf()) throw Error("fallback() on a leaf");
  return *fallback_;
}

DecisionTree& DecisionTree::fallback() {
  if (is_leaf()) throw Error("fallback() on a leaf");
  return *fallback_;
}

std::size_t DecisionTree::depth() const {
  if (is_leaf()) return 0;
  std::size_t deepest = fallback_->depth();
  for (const Arc& a : arcs_) deepest = std::max(deepest, a.child->depth());
  return deepest + 1;
}

std::size_t DecisionTree::node_count() const {
  if (is_leaf()) return 1;
  std::size_t count = 1 + fallback_->node_count();
  for (const Arc& a : arcs_) count += a.child->node_count();
  return count;
}

bool operator==(const DecisionTree& a, const DecisionTree& b) {
  if (a.is_leaf() != b.is_leaf()) return false;
  if (a.is_leaf()) return a.sense_ == b.sense_;
  if (a.position_ != b.position_ || a.arcs_.size() != b.arcs_.size()) return false;
  for (std::size_t i = 0; i < a.arcs_.size(); ++i) {
    if (a.arcs_[i].tokens != b.arcs_[i].tokens) return false;
    if (!(*a.arcs_[i].child == *b.arcs_[i].child)) return false;
  }
  return *a.fallback_ == *b.fallback_;
}

SenseClass classify(const DecisionTree& tree, const TrainingCase& c) {
  const DecisionTree* cur = &tree;
  while (!cur->is_leaf()) {
    const Token& tok = c.at(cur->position());
    const DecisionTree* next = &cur->fallback();
    for (const Arc& a : cur->arcs()) {
      if (a.contains(tok)) {
        next = a.child.get();
        break;
      }
    }
    cur = next;
  }
  return cur->leaf_sense();
}

std::string EvaluationReport::summary() const {
  return std::to_string(correct) + "/" + std::to_string(total) + " = " + format_percent(correct, total) + "%";
}

EvaluationReport evaluate(const DecisionTree& tree, const Corpus& cases) {
  if (cases.empty()) throw EvaluationError("cannot evaluate over an empty case list");
  EvaluationReport report;
  report.total = cases.size();
  for (const TrainingCase& c : cases) {
    if (classify(tree, c) == c.sense) ++report.correct;
  }
  return report;
}

DecisionTree hl_baseline_tree() {
  std::vector<Arc> arcs;
  arcs.emplace_back(std::vector<Token>{Token(kPeriod), Token(kComma)},
                    DecisionTree::leaf(SenseClass::Discourse));
  return DecisionTree::node(-1, std::move(arcs), DecisionTree::leaf(SenseClass::Sentential));
}

namespace {

std::optional<ValidationIssue> validate_impl(const DecisionTree& t, const Vocabulary& vocab,
                                             const TreeLimits& limits, const std::string& path,
                                             std::size_t level) {
  if (t.is_leaf()) return std::nullopt;
  if (level >= limits.max_depth) {
    return ValidationIssue{path, "depth exceeds bound of " + std::to_string(limits.max_depth)};
  }
  if (t.arcs().empty()) return ValidationIssue{path, "internal node without arcs"};
  if (t.arcs().size() > limits.max_arcs) {
    return ValidationIssue{path, "more than " + std::to_string(limits.max_arcs) + " arcs"};
  }
  const std::vector<Token>& partition = vocab.partition(t.position());
  for (std::size_t i = 0; i < t.arcs().size(); ++i) {
    const Arc& a = t.arcs()[i];
    const std::string arc_path = path + ".arc[" + std::to_string(i) + "]";
    if (a.tokens.empty()) return ValidationIssue{arc_path, "empty token set"};
    if (a.tokens.size() > limits.max_tokens_per_arc) {
      return ValidationIssue{arc_path, "more than " + std::to_string(limits.max_tokens_per_arc) + " tokens"};
    }
    for (std::size_t j = 0; j < a.tokens.size(); ++j) {
      const Token& tok = a.tokens[j];
      if (!std::binary_search(partition.begin(), partition.end(), tok)) {
        return ValidationIssue{arc_path, "token '" + tok + "' is not in the vocabulary for position " +
                                             std::to_string(t.position())};
      }
      if (std::find(a.tokens.begin(), a.tokens.begin() + static_cast<std::ptrdiff_t>(j), tok) !=
          a.tokens.begin() + static_cast<std::ptrdiff_t>(j)) {
        return ValidationIssue{arc_path, "duplicate token '" + tok + "' in arc set"};
      }
    }
    if (auto issue = validate_impl(*a.child, vocab, limits, arc_path, level + 1)) return issue;
  }
  return validate_impl(t.fallback(), vocab, limits, path + ".default", level + 1);
}

}  // namespace

std::optional<ValidationIssue> validate_tree(const DecisionTree& tree, const Vocabulary& vocab,
                                             const TreeLimits& limits) {
  return validate_impl(tree, vocab, limits, "root", 0);
}

namespace {

void serialize_impl(const DecisionTree& t, std::string& out) {
  if (t.is_leaf()) {
    out += "(leaf ";
    out += sense_symbol(t.leaf_sense());
    out += ')';
    return;
  }
  out += "(node ";
  out += std::to_string(t.position());
  for (const Arc& a : t.arcs()) {
    out += " (arc {";
    for (std::size_t i = 0; i < a.tokens.size(); ++i) {
      if (i) out += ' ';
      out += a.tokens[i];
    }
    out += "} ";
    serialize_impl(*a.child, out);
    out += ')';
  }
  out += " (default ";
  serialize_impl(t.fallback(), out);
  out += "))";
}

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  DecisionTree parse() {
    DecisionTree t = parse_tree();
    while (pos_ < text_.size() && (text_[pos_] == '\n' || text_[pos_] == '\r' ||
                                   text_[pos_] == ' ' || text_[pos_] == '\t')) {
      ++pos_;
    }
    if (pos_ != text_.size()) fail("trailing characters after tree");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw TreeParseError(msg, pos_); }

  void expect(std::string_view literal) {
    if (text_.substr(pos_, literal.size()) != literal) {
      fail("expected '" + std::string(literal) + "'");
    }
    pos_ += literal.size();
  }

  bool peek(std::string_view literal) const { return text_.substr(pos_, literal.size()) == literal; }

  DecisionTree parse_tree() {
    if (peek("(leaf ")) return parse_leaf();
    if (peek("(node ")) return parse_node();
    fail("expected '(leaf ' or '(node '");
  }

  DecisionTree parse_leaf() {
    expect("(leaf ");
    SenseClass sense;
    if (peek("D")) {
      sense = SenseClass::Discourse;
    } else if (peek("S")) {
      sense = SenseClass::Sentential;
    } else {
      fail("expected class D or S");
    }
    ++pos_;
    expect(")");
    return DecisionTree::leaf(sense);
  }

  DecisionTree parse_node() {
    expect("(node ");
    int position = parse_position();
    std::vector<Arc> arcs;
    expect(" ");
    if (!peek("(arc {")) fail("node needs at least one arc");
    while (peek("(arc {")) {
      arcs.push_back(parse_arc());
      expect(" ");
    }
    expect("(default ");
    DecisionTree fallback = parse_tree();
    expect(")");
    expect(")");
    return DecisionTree::node(position, std::move(arcs), std::move(fallback));
  }

  int parse_position() {
    for (int p : kPositions) {
      const std::string s = std::to_string(p);
      if (peek(s)) {
        pos_ += s.size();
        return p;
      }
    }
    fail("expected position -1..4");
  }

  Arc parse_arc() {
    expect("(arc {");
    std::vector<Token> tokens;
    while (true) {
      Token t = parse_token();
      if (std::find(tokens.begin(), tokens.end(), t) != tokens.end()) {
        fail("duplicate token '" + t + "' in arc set");
      }
      tokens.push_back(std::move(t));
      if (peek("}")) break;
      expect(" ");
    }
    expect("} ");
    DecisionTree child = parse_tree();
    expect(")");
    Arc arc;
    arc.tokens = std::move(tokens);
    arc.child = std::make_unique<DecisionTree>(std::move(child));
    return arc;
  }

  Token parse_token() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ' ' && text_[pos_] != '}' &&
           text_[pos_] != ')' && text_[pos_] != '{') {
      ++pos_;
    }
    Token t{text_.substr(start, pos_ - start)};
    if (t.empty()) fail("empty token");
    if (!is_normalized_token(t)) {
      pos_ = start;
      fail("token '" + t + "' is not in normalized form");
    }
    return t;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string serialize_tree(const DecisionTree& tree) {
  std::string out;
  serialize_impl(tree, out);
  return out;
}

DecisionTree parse_tree(std::string_view text) { return TreeParser(text).parse(); }

}  // namespace cluetree
