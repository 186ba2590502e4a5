#pragma once

#include <cstdint>
#include <vector>

#include "cluetree/corpus.hpp"
#include "cluetree/rng.hpp"
#include "cluetree/tree.hpp"
#include "cluetree/vocabulary.hpp"

namespace cluetree {

struct GAParams {
  std::size_t population_size = 100;
  std::size_t generations = 200;
  double crossover_rate = 0.8;
  double mutation_rate = 0.2;  // per individual
  std::size_t tournament_size = 3;
  std::size_t elitism = 1;
  std::size_t max_depth = 6;
  std::size_t max_arcs = 8;
  std::size_t max_tokens_per_arc = 8;
  std::uint64_t seed = 0;

  TreeLimits limits() const { return TreeLimits{max_depth, max_arcs, max_tokens_per_arc}; }
  void validate() const;  // throws Error on violated invariants
};

struct RunResult {
  DecisionTree best_tree;
  std::size_t best_train_fitness = 0;
  std::size_t evaluations_used = 0;
  std::uint64_t seed = 0;
  // Highest population fitness of each generation, index 0 = initial
  // population. With elitism this sequence is non-decreasing.
  std::vector<std::size_t> generation_best;
};

// Grow-style generation: leaves become likelier with depth, positions are
// uniform, and arc token sets are sampled without replacement from the
// matching vocabulary partition. Output always satisfies params.limits().
DecisionTree random_tree(const Vocabulary& vocab, const GAParams& params, Rng& rng);

// Number of training cases classified correctly; the selection signal.
std::size_t fitness(const DecisionTree& tree, const Corpus& train);

// Combines two parents, with equal probability either by subtree
// replacement (grafting a random subtree of `b` onto a copy of `a`, then
// truncating over-deep growth to majority-class leaves of the training
// cases reaching the cut) or by token-set recombination (one arc of `a`
// gets the union-then-random-half of its tokens with a position-compatible
// arc of `b`). Falls back to subtree mode when no compatible arcs exist.
DecisionTree crossover(const DecisionTree& a, const DecisionTree& b, const Corpus& train,
                       const GAParams& params, Rng& rng);

// One uniformly chosen feasible edit: flip a leaf class, relabel a node
// position (resampling arc tokens from the new partition), add a token to
// an arc, drop a token from a multi-token arc, or regrow a random subtree
// within the remaining depth budget.
DecisionTree mutate(const DecisionTree& tree, const Vocabulary& vocab, const GAParams& params, Rng& rng);

// Generational loop with tournament selection and elitism. Returns the
// highest-fitness tree encountered across all generations. Deterministic
// in params.seed.
RunResult induce_ga(const Corpus& train, const Vocabulary& vocab, const GAParams& params);

}  // namespace cluetree
