#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cluetree/corpus.hpp"
#include "cluetree/ga.hpp"
#include "cluetree/topdown.hpp"
#include "cluetree/tree.hpp"
#include "cluetree/vocabulary.hpp"

namespace cluetree {

enum class Method { Ga, Topdown, Baseline };

Method method_from_name(std::string_view name);  // "ga" | "topdown" | "baseline"
std::string_view method_name(Method m);

struct ExperimentConfig {
  Method method = Method::Ga;
  std::size_t n_runs = 1;
  std::uint64_t base_seed = 0;
  std::size_t threads = 1;
  GAParams ga;
  TopDownParams topdown;
  VocabularyConfig vocab;

  void validate() const;
};

struct SingleRun {
  EvaluationReport train;
  EvaluationReport test;
  DecisionTree tree;
};

// Splits by `seed`, induces on the training half (the baseline method
// ignores it and returns the fixed tree), and scores both halves. The
// induction seed equals the split seed, so the run is a pure function of
// (corpus, config, seed).
SingleRun run_once(const Corpus& corpus, const ExperimentConfig& config, std::uint64_t seed);

struct RunRecord {
  std::uint64_t seed = 0;
  EvaluationReport train;
  EvaluationReport test;

  double disparity() const { return train.percent() - test.percent(); }
};

struct ExperimentReport {
  std::vector<RunRecord> per_run;  // in seed order
  double max_test = 0.0;
  double mean_test = 0.0;
  double mean_disparity_signed = 0.0;
  double mean_disparity_abs = 0.0;
  // The tree of the run with the highest training accuracy (ties go to the
  // lower seed); its test score is what max_test/mean_test summarize the
  // best of.
  DecisionTree best_tree;
  std::uint64_t best_seed = 0;
};

// n_runs independent runs with seeds base_seed .. base_seed + n_runs - 1.
// Each run contributes its best-by-training tree to the candidate pool;
// the summary statistics are taken over that pool. Runs may execute
// concurrently (config.threads) without affecting the result.
ExperimentReport run_experiment(const Corpus& corpus, const ExperimentConfig& config);

struct WordBreakdownRow {
  Token word;
  std::size_t correct = 0;
  std::size_t total = 0;
};

// Per-clue-word evaluation slices, sorted by word. The case-weighted mean
// of slice accuracies equals the overall accuracy exactly.
std::vector<WordBreakdownRow> per_word_breakdown(const DecisionTree& tree, const Corpus& cases);

// TSV rows (seed, train, test, disparity) followed by "# summary" lines.
std::string export_report_tsv(const ExperimentReport& report);

}  // namespace cluetree
