#include "cluetree/ga.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cluetree/errors.hpp"

namespace cluetree {
namespace {

std::vector<Token> sample_tokens(const std::vector<Token>& partition, std::size_t count, Rng& rng) {
  std::vector<std::size_t> idx(partition.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<Token> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t j = k + rng.below(idx.size() - k);
    std::swap(idx[k], idx[j]);
    out.push_back(partition[idx[k]]);
  }
  return out;
}

SenseClass random_sense(Rng& rng) {
  return rng.below(2) == 0 ? SenseClass::Discourse : SenseClass::Sentential;
}

DecisionTree grow(const Vocabulary& vocab, const GAParams& p, Rng& rng, std::size_t level) {
  // leaves get likely quickly below the root; unchecked growth buries the
  // population in bushy low-signal trees
  const bool make_leaf =
      level >= p.max_depth ||
      (level > 0 &&
       rng.unit() < std::sqrt(static_cast<double>(level) / static_cast<double>(p.max_depth)));
  if (make_leaf) return DecisionTree::leaf(random_sense(rng));

  const int position = kPositions[rng.below(kPositions.size())];
  const std::vector<Token>& partition = vocab.partition(position);
  const std::size_t arc_count = 1 + rng.below(p.max_arcs);
  std::vector<Arc> arcs;
  arcs.reserve(arc_count);
  for (std::size_t i = 0; i < arc_count; ++i) {
    const std::size_t max_tokens = std::min(p.max_tokens_per_arc, partition.size());
    const std::size_t token_count = 1 + rng.below(max_tokens);
    arcs.emplace_back(sample_tokens(partition, token_count, rng), grow(vocab, p, rng, level + 1));
  }
  return DecisionTree::node(position, std::move(arcs), grow(vocab, p, rng, level + 1));
}

// Mutable preorder listing of every subtree with its level.
void list_nodes(DecisionTree& t, std::size_t level, std::vector<std::pair<DecisionTree*, std::size_t>>& out) {
  out.emplace_back(&t, level);
  if (t.is_leaf()) return;
  for (Arc& a : t.arcs()) list_nodes(*a.child, level + 1, out);
  list_nodes(t.fallback(), level + 1, out);
}

void list_nodes_const(const DecisionTree& t, std::vector<const DecisionTree*>& out) {
  out.push_back(&t);
  if (t.is_leaf()) return;
  for (const Arc& a : t.arcs()) list_nodes_const(*a.child, out);
  list_nodes_const(t.fallback(), out);
}

SenseClass majority_sense(const std::vector<const TrainingCase*>& cases) {
  std::size_t d = 0;
  for (const TrainingCase* c : cases) {
    if (c->sense == SenseClass::Discourse) ++d;
  }
  return d > cases.size() - d ? SenseClass::Discourse : SenseClass::Sentential;
}

// Replaces any internal node sitting at the depth bound with the majority
// leaf of the training cases reaching it (ties and empty sets go to the
// corpus majority class, Sentential).
void truncate_to_depth(DecisionTree& t, std::size_t level, std::size_t max_depth,
                       std::vector<const TrainingCase*> reaching) {
  if (t.is_leaf()) return;
  if (level >= max_depth) {
    t = DecisionTree::leaf(majority_sense(reaching));
    return;
  }
  std::vector<std::vector<const TrainingCase*>> per_arc(t.arcs().size());
  std::vector<const TrainingCase*> fallback_cases;
  for (const TrainingCase* c : reaching) {
    const Token& tok = c->at(t.position());
    bool taken = false;
    for (std::size_t i = 0; i < t.arcs().size(); ++i) {
      if (t.arcs()[i].contains(tok)) {
        per_arc[i].push_back(c);
        taken = true;
        break;
      }
    }
    if (!taken) fallback_cases.push_back(c);
  }
  for (std::size_t i = 0; i < t.arcs().size(); ++i) {
    truncate_to_depth(*t.arcs()[i].child, level + 1, max_depth, std::move(per_arc[i]));
  }
  truncate_to_depth(t.fallback(), level + 1, max_depth, std::move(fallback_cases));
}

struct ArcRef {
  DecisionTree* node;
  std::size_t arc_index;
};

enum class EditKind { FlipLeaf, RelabelNode, AddToken, RemoveToken, ReplaceSubtree };

}  // namespace

void GAParams::validate() const {
  if (population_size < 2) throw Error("population_size must be at least 2");
  if (crossover_rate < 0.0 || crossover_rate > 1.0) throw Error("crossover_rate must be in [0,1]");
  if (mutation_rate < 0.0 || mutation_rate > 1.0) throw Error("mutation_rate must be in [0,1]");
  if (tournament_size < 1) throw Error("tournament_size must be at least 1");
  if (elitism >= population_size) throw Error("elitism must be smaller than population_size");
  if (max_arcs < 1 || max_tokens_per_arc < 1) throw Error("arc limits must be at least 1");
}

DecisionTree random_tree(const Vocabulary& vocab, const GAParams& params, Rng& rng) {
  if (vocab.general.empty() || vocab.clue.empty()) {
    throw GenerationError("cannot generate trees from an empty vocabulary partition");
  }
  if (params.max_arcs < 1 || params.max_tokens_per_arc < 1) {
    throw GenerationError("arc limits must be at least 1");
  }
  return grow(vocab, params, rng, 0);
}

std::size_t fitness(const DecisionTree& tree, const Corpus& train) {
  return evaluate(tree, train).correct;
}

DecisionTree crossover(const DecisionTree& a, const DecisionTree& b, const Corpus& train,
                       const GAParams& params, Rng& rng) {
  DecisionTree child = a;
  bool token_mode = rng.below(2) == 1;

  if (token_mode) {
    std::vector<std::pair<DecisionTree*, std::size_t>> child_nodes;
    list_nodes(child, 0, child_nodes);
    std::vector<const DecisionTree*> b_nodes;
    list_nodes_const(b, b_nodes);

    std::array<std::vector<ArcRef>, kPositionCount> child_arcs;
    std::array<std::vector<const Arc*>, kPositionCount> b_arcs;
    for (auto& [node, level] : child_nodes) {
      if (node->is_leaf()) continue;
      for (std::size_t i = 0; i < node->arcs().size(); ++i) {
        child_arcs[position_index(node->position())].push_back(ArcRef{node, i});
      }
    }
    for (const DecisionTree* node : b_nodes) {
      if (node->is_leaf()) continue;
      for (const Arc& arc : node->arcs()) {
        b_arcs[position_index(node->position())].push_back(&arc);
      }
    }

    std::vector<std::size_t> common;
    for (std::size_t i = 0; i < kPositionCount; ++i) {
      if (!child_arcs[i].empty() && !b_arcs[i].empty()) common.push_back(i);
    }
    if (common.empty()) {
      token_mode = false;  // no position-compatible arc pair
    } else {
      const std::size_t pi = common[rng.below(common.size())];
      const ArcRef target = child_arcs[pi][rng.below(child_arcs[pi].size())];
      const Arc* donor = b_arcs[pi][rng.below(b_arcs[pi].size())];

      std::vector<Token>& tokens = target.node->arcs()[target.arc_index].tokens;
      std::vector<Token> pool = tokens;
      for (const Token& t : donor->tokens) {
        if (std::find(pool.begin(), pool.end(), t) == pool.end()) pool.push_back(t);
      }
      rng.shuffle(pool);
      std::size_t keep = std::min((pool.size() + 1) / 2, params.max_tokens_per_arc);
      if (keep == 0) keep = 1;
      pool.resize(keep);
      tokens = std::move(pool);
      return child;
    }
  }

  // Subtree mode: graft a random subtree of b onto a random node of the copy.
  std::vector<std::pair<DecisionTree*, std::size_t>> targets;
  list_nodes(child, 0, targets);
  std::vector<const DecisionTree*> donors;
  list_nodes_const(b, donors);
  DecisionTree* target = targets[rng.below(targets.size())].first;
  *target = *donors[rng.below(donors.size())];

  std::vector<const TrainingCase*> all_cases;
  all_cases.reserve(train.size());
  for (const TrainingCase& c : train) all_cases.push_back(&c);
  truncate_to_depth(child, 0, params.max_depth, std::move(all_cases));
  return child;
}

DecisionTree mutate(const DecisionTree& tree, const Vocabulary& vocab, const GAParams& params, Rng& rng) {
  DecisionTree copy = tree;
  std::vector<std::pair<DecisionTree*, std::size_t>> nodes;
  list_nodes(copy, 0, nodes);

  std::vector<DecisionTree*> leaves;
  std::vector<std::pair<DecisionTree*, std::size_t>> internals;
  std::vector<ArcRef> addable, removable;
  for (auto& [node, level] : nodes) {
    if (node->is_leaf()) {
      leaves.push_back(node);
      continue;
    }
    internals.emplace_back(node, level);
    const std::vector<Token>& partition = vocab.partition(node->position());
    for (std::size_t i = 0; i < node->arcs().size(); ++i) {
      const std::size_t size = node->arcs()[i].tokens.size();
      if (size < params.max_tokens_per_arc && size < partition.size()) addable.push_back({node, i});
      if (size >= 2) removable.push_back({node, i});
    }
  }

  std::vector<int> relabel_choices;  // positions with a nonempty partition
  for (int p : kPositions) {
    if (!vocab.partition(p).empty()) relabel_choices.push_back(p);
  }

  std::vector<EditKind> feasible{EditKind::FlipLeaf, EditKind::ReplaceSubtree};
  if (!internals.empty() && relabel_choices.size() > 1) feasible.push_back(EditKind::RelabelNode);
  if (!addable.empty()) feasible.push_back(EditKind::AddToken);
  if (!removable.empty()) feasible.push_back(EditKind::RemoveToken);

  switch (feasible[rng.below(feasible.size())]) {
    case EditKind::FlipLeaf: {
      DecisionTree* leaf = leaves[rng.below(leaves.size())];
      const SenseClass flipped = leaf->leaf_sense() == SenseClass::Discourse
                                     ? SenseClass::Sentential
                                     : SenseClass::Discourse;
      *leaf = DecisionTree::leaf(flipped);
      break;
    }
    case EditKind::RelabelNode: {
      auto [node, level] = internals[rng.below(internals.size())];
      std::vector<int> others;
      for (int p : relabel_choices) {
        if (p != node->position()) others.push_back(p);
      }
      const int new_position = others[rng.below(others.size())];
      const std::vector<Token>& partition = vocab.partition(new_position);
      std::vector<Arc> arcs = std::move(node->arcs());
      for (Arc& a : arcs) {
        const std::size_t count = std::clamp<std::size_t>(a.tokens.size(), 1, partition.size());
        a.tokens = sample_tokens(partition, count, rng);
      }
      DecisionTree fallback = std::move(node->fallback());
      *node = DecisionTree::node(new_position, std::move(arcs), std::move(fallback));
      break;
    }
    case EditKind::AddToken: {
      const ArcRef ref = addable[rng.below(addable.size())];
      std::vector<Token>& tokens = ref.node->arcs()[ref.arc_index].tokens;
      std::vector<Token> candidates;
      for (const Token& t : vocab.partition(ref.node->position())) {
        if (std::find(tokens.begin(), tokens.end(), t) == tokens.end()) candidates.push_back(t);
      }
      tokens.push_back(candidates[rng.below(candidates.size())]);
      break;
    }
    case EditKind::RemoveToken: {
      const ArcRef ref = removable[rng.below(removable.size())];
      std::vector<Token>& tokens = ref.node->arcs()[ref.arc_index].tokens;
      tokens.erase(tokens.begin() + static_cast<std::ptrdiff_t>(rng.below(tokens.size())));
      break;
    }
    case EditKind::ReplaceSubtree: {
      auto [node, level] = nodes[rng.below(nodes.size())];
      *node = grow(vocab, params, rng, level);
      break;
    }
  }
  return copy;
}

namespace {

struct Individual {
  DecisionTree tree;
  std::size_t fit = 0;
};

std::size_t tournament(const std::vector<Individual>& pop, std::size_t rounds, Rng& rng) {
  std::size_t best = rng.below(pop.size());
  for (std::size_t i = 1; i < rounds; ++i) {
    const std::size_t contender = rng.below(pop.size());
    if (pop[contender].fit > pop[best].fit) best = contender;
  }
  return best;
}

}  // namespace

RunResult induce_ga(const Corpus& train, const Vocabulary& vocab, const GAParams& params) {
  params.validate();
  if (train.empty()) throw EvaluationError("cannot induce from an empty training corpus");
  if (vocab.general.empty() || vocab.clue.empty()) {
    throw GenerationError("cannot run the GA with an empty vocabulary partition");
  }

  Rng rng(params.seed);
  RunResult result;
  result.seed = params.seed;

  std::vector<Individual> pop;
  pop.reserve(params.population_size);
  for (std::size_t i = 0; i < params.population_size; ++i) {
    Individual ind;
    ind.tree = random_tree(vocab, params, rng);
    ind.fit = fitness(ind.tree, train);
    pop.push_back(std::move(ind));
  }
  result.evaluations_used = params.population_size;

  std::size_t best_index = 0;
  for (std::size_t i = 1; i < pop.size(); ++i) {
    if (pop[i].fit > pop[best_index].fit) best_index = i;
  }
  result.best_tree = pop[best_index].tree;
  result.best_train_fitness = pop[best_index].fit;
  result.generation_best.push_back(pop[best_index].fit);

  std::vector<std::size_t> order(params.population_size);
  for (std::size_t gen = 0; gen < params.generations; ++gen) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return pop[x].fit > pop[y].fit; });

    std::vector<Individual> next;
    next.reserve(params.population_size);
    for (std::size_t e = 0; e < params.elitism; ++e) next.push_back(pop[order[e]]);

    while (next.size() < params.population_size) {
      const std::size_t p1 = tournament(pop, params.tournament_size, rng);
      DecisionTree child;
      if (rng.chance(params.crossover_rate)) {
        const std::size_t p2 = tournament(pop, params.tournament_size, rng);
        child = crossover(pop[p1].tree, pop[p2].tree, train, params, rng);
      } else {
        child = pop[p1].tree;
      }
      if (rng.chance(params.mutation_rate)) {
        child = mutate(child, vocab, params, rng);
      }
      Individual ind;
      ind.fit = fitness(child, train);
      ind.tree = std::move(child);
      ++result.evaluations_used;
      next.push_back(std::move(ind));
    }
    pop = std::move(next);

    std::size_t gen_best = 0;
    for (std::size_t i = 1; i < pop.size(); ++i) {
      if (pop[i].fit > pop[gen_best].fit) gen_best = i;
    }
    result.generation_best.push_back(pop[gen_best].fit);
    if (pop[gen_best].fit > result.best_train_fitness) {
      result.best_train_fitness = pop[gen_best].fit;
      result.best_tree = pop[gen_best].tree;
    }
  }
  return result;
}

}  // namespace cluetree
