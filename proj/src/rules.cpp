#include "cluetree/rules.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <unordered_map>

#include "cluetree/errors.hpp"
#include "cluetree/format.hpp"

namespace cluetree {
namespace {

// Leaves in depth-first, left-to-right order, each with its path.
void collect_paths(const DecisionTree& t, std::vector<RuleCondition>& prefix,
                   std::vector<Rule>& rules, std::vector<const DecisionTree*>& leaves) {
  if (t.is_leaf()) {
    Rule r;
    r.path = prefix;
    r.predicted = t.leaf_sense();
    rules.push_back(std::move(r));
    leaves.push_back(&t);
    return;
  }
  for (const Arc& a : t.arcs()) {
    prefix.push_back(RuleCondition{t.position(), a.tokens, false});
    collect_paths(*a.child, prefix, rules, leaves);
    prefix.pop_back();
  }
  prefix.push_back(RuleCondition{t.position(), {}, true});
  collect_paths(t.fallback(), prefix, rules, leaves);
  prefix.pop_back();
}

const DecisionTree* route(const DecisionTree& tree, const TrainingCase& c) {
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
  return cur;
}

struct PathIndex {
  std::vector<Rule> rules;
  std::unordered_map<const DecisionTree*, std::size_t> leaf_to_rule;

  explicit PathIndex(const DecisionTree& tree) {
    std::vector<RuleCondition> prefix;
    std::vector<const DecisionTree*> leaves;
    collect_paths(tree, prefix, rules, leaves);
    for (std::size_t i = 0; i < leaves.size(); ++i) leaf_to_rule.emplace(leaves[i], i);
  }
};

void sort_scope(Rule& r, std::set<Token>& scope) {
  r.word_scope.assign(scope.begin(), scope.end());
}

}  // namespace

std::string condition_text(const Rule& rule) {
  if (rule.path.empty() || rule.path.back().is_default) return "DEFAULT";
  const RuleCondition& c = rule.path.back();
  std::string out = std::to_string(c.position) + "={";
  for (std::size_t i = 0; i < c.tokens.size(); ++i) {
    if (i) out += ' ';
    out += c.tokens[i];
  }
  out += '}';
  return out;
}

std::vector<Rule> extract_rules(const DecisionTree& tree, const Corpus& cases) {
  if (cases.empty()) throw RuleExtractionError("cannot extract rules over an empty case list");

  PathIndex index(tree);
  std::vector<std::set<Token>> scopes(index.rules.size());
  for (const TrainingCase& c : cases) {
    const std::size_t i = index.leaf_to_rule.at(route(tree, c));
    Rule& r = index.rules[i];
    ++r.matched;
    if (r.predicted == c.sense) ++r.correct;
    scopes[i].insert(c.at(0));
  }
  for (std::size_t i = 0; i < index.rules.size(); ++i) sort_scope(index.rules[i], scopes[i]);
  return index.rules;
}

PerWordRules per_word_rules(const DecisionTree& tree, const Token& word, const Corpus& cases) {
  if (cases.empty()) throw RuleExtractionError("cannot extract rules over an empty case list");

  PathIndex index(tree);
  std::size_t slice_total = 0, slice_correct = 0;
  for (const TrainingCase& c : cases) {
    if (c.at(0) != word) continue;
    ++slice_total;
    const std::size_t i = index.leaf_to_rule.at(route(tree, c));
    Rule& r = index.rules[i];
    ++r.matched;
    if (r.predicted == c.sense) ++r.correct;
  }
  if (slice_total == 0) {
    throw RuleExtractionError("clue word '" + word + "' does not occur in the case list");
  }

  PerWordRules result;
  for (Rule& r : index.rules) {
    if (r.matched == 0) continue;
    r.word_scope = {word};
    slice_correct += r.correct;
    result.rules.push_back(std::move(r));
  }
  result.overall = EvaluationReport{slice_correct, slice_total};
  return result;
}

std::vector<Rule> generalized_rules(const DecisionTree& tree, const Corpus& cases) {
  if (cases.empty()) throw RuleExtractionError("cannot extract rules over an empty case list");

  std::set<Token> words;
  for (const TrainingCase& c : cases) words.insert(c.at(0));

  // Key: decisive condition (position + token set, or DEFAULT) and the
  // predicted class. Token sets compare as sets.
  using Key = std::tuple<bool, int, std::vector<Token>, char>;
  std::map<Key, Rule> groups;
  std::map<Key, std::set<Token>> group_scopes;
  std::map<Key, std::size_t> first_seen;
  std::size_t order = 0;

  for (const Token& word : words) {
    const PerWordRules pwr = per_word_rules(tree, word, cases);
    for (const Rule& r : pwr.rules) {
      const bool is_default = r.path.empty() || r.path.back().is_default;
      std::vector<Token> tokens;
      int position = 0;
      if (!is_default) {
        position = r.path.back().position;
        tokens = r.path.back().tokens;
        std::sort(tokens.begin(), tokens.end());
      } else if (!r.path.empty()) {
        position = r.path.back().position;
      }
      Key key{is_default, position, std::move(tokens), sense_symbol(r.predicted)};
      auto [it, inserted] = groups.try_emplace(key);
      if (inserted) {
        it->second.path = r.path;
        it->second.predicted = r.predicted;
        first_seen[key] = order++;
      }
      it->second.matched += r.matched;
      it->second.correct += r.correct;
      group_scopes[key].insert(word);
    }
  }

  std::vector<std::pair<Key, Rule>> merged;
  for (auto& [key, rule] : groups) {
    sort_scope(rule, group_scopes[key]);
    merged.emplace_back(key, std::move(rule));
  }
  std::sort(merged.begin(), merged.end(), [&](const auto& a, const auto& b) {
    if (a.second.matched != b.second.matched) return a.second.matched > b.second.matched;
    if (a.second.correct != b.second.correct) return a.second.correct > b.second.correct;
    return first_seen.at(a.first) < first_seen.at(b.first);
  });

  std::vector<Rule> out;
  out.reserve(merged.size());
  for (auto& [key, rule] : merged) out.push_back(std::move(rule));
  return out;
}

std::string export_rules_tsv(const std::vector<Rule>& rules, RuleScope scope) {
  std::string out = "# scope\tindex\tcondition\tpredicted\tmatched\tcorrect\taccuracy\n";
  std::size_t index = 1;
  for (const Rule& r : rules) {
    std::string scope_text;
    switch (scope) {
      case RuleScope::AllCases:
        scope_text = "*";
        break;
      case RuleScope::SingleWord:
        scope_text = r.word_scope.empty() ? "*" : r.word_scope.front();
        break;
      case RuleScope::Generalized:
        for (std::size_t i = 0; i < r.word_scope.size(); ++i) {
          if (i) scope_text += '+';
          scope_text += r.word_scope[i];
        }
        if (scope_text.empty()) scope_text = "*";
        break;
    }
    out += scope_text;
    out += '\t';
    out += std::to_string(index++);
    out += '\t';
    out += condition_text(r);
    out += '\t';
    out += sense_symbol(r.predicted);
    out += '\t';
    out += std::to_string(r.matched);
    out += '\t';
    out += std::to_string(r.correct);
    out += '\t';
    out += r.matched ? format_percent(r.correct, r.matched) : "0.00";
    out += '\n';
  }
  return out;
}

}  // namespace cluetree
