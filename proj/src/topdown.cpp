#include "cluetree/topdown.hpp"

#include <cmath>

#include "cluetree/errors.hpp"

namespace cluetree {
namespace {

double entropy_counts(std::size_t discourse, std::size_t total) {
  if (discourse == 0 || discourse == total) return 0.0;
  const double pd = static_cast<double>(discourse) / static_cast<double>(total);
  const double ps = 1.0 - pd;
  return -(pd * std::log2(pd) + ps * std::log2(ps));
}

SenseClass majority_sense(std::size_t discourse, std::size_t total) {
  return discourse > total - discourse ? SenseClass::Discourse : SenseClass::Sentential;
}

DecisionTree grow(const std::vector<const TrainingCase*>& cases, const Vocabulary& vocab,
                  const TopDownParams& params, std::size_t depth_budget) {
  std::size_t discourse = 0;
  for (const TrainingCase* c : cases) {
    if (c->sense == SenseClass::Discourse) ++discourse;
  }
  const std::size_t total = cases.size();
  if (discourse == 0 || discourse == total || depth_budget == 0) {
    return DecisionTree::leaf(majority_sense(discourse, total));
  }

  Corpus view;
  view.cases.reserve(total);
  for (const TrainingCase* c : cases) view.cases.push_back(*c);
  const auto split = best_split(view, vocab, params);
  if (!split) return DecisionTree::leaf(majority_sense(discourse, total));

  std::vector<const TrainingCase*> matching, rest;
  for (const TrainingCase* c : cases) {
    (c->at(split->position) == split->token ? matching : rest).push_back(c);
  }

  std::vector<Arc> arcs;
  arcs.emplace_back(std::vector<Token>{split->token}, grow(matching, vocab, params, depth_budget - 1));
  return DecisionTree::node(split->position, std::move(arcs),
                            grow(rest, vocab, params, depth_budget - 1));
}

}  // namespace

double entropy(const Corpus& cases) {
  if (cases.empty()) throw EvaluationError("entropy of an empty case list");
  return entropy_counts(cases.count_discourse(), cases.size());
}

std::optional<SplitChoice> best_split(const Corpus& cases, const Vocabulary& vocab,
                                      const TopDownParams& params) {
  if (cases.empty() || cases.size() < params.min_cases_per_split) return std::nullopt;

  const std::size_t n = cases.size();
  const std::size_t discourse = cases.count_discourse();
  const double base = entropy_counts(discourse, n);

  std::optional<SplitChoice> best;
  // Position order then token order realizes the documented tie-break:
  // strictly-greater comparison keeps the first maximizer encountered.
  for (int position : kPositions) {
    for (const Token& token : vocab.partition(position)) {
      std::size_t n1 = 0, d1 = 0;
      for (const TrainingCase& c : cases) {
        if (c.at(position) == token) {
          ++n1;
          if (c.sense == SenseClass::Discourse) ++d1;
        }
      }
      const std::size_t n2 = n - n1;
      const std::size_t d2 = discourse - d1;
      const double weighted = (static_cast<double>(n1) * entropy_counts(d1, n1) +
                               static_cast<double>(n2) * entropy_counts(d2, n2)) /
                              static_cast<double>(n);
      const double gain = base - weighted;
      if (gain > params.min_gain && (!best || gain > best->gain)) {
        best = SplitChoice{position, token, gain};
      }
    }
  }
  return best;
}

DecisionTree induce_topdown(const Corpus& train, const Vocabulary& vocab, const TopDownParams& params) {
  if (train.empty()) throw EvaluationError("cannot induce from an empty training corpus");
  std::vector<const TrainingCase*> cases;
  cases.reserve(train.size());
  for (const TrainingCase& c : train) cases.push_back(&c);
  return grow(cases, vocab, params, params.max_depth);
}

}  // namespace cluetree
