#include "cluetree/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <thread>

#include "cluetree/errors.hpp"
#include "cluetree/format.hpp"

namespace cluetree {

Method method_from_name(std::string_view name) {
  if (name == "ga") return Method::Ga;
  if (name == "topdown") return Method::Topdown;
  if (name == "baseline") return Method::Baseline;
  throw Error("unknown method '" + std::string(name) + "' (expected ga, topdown, or baseline)");
}

std::string_view method_name(Method m) {
  switch (m) {
    case Method::Ga: return "ga";
    case Method::Topdown: return "topdown";
    case Method::Baseline: return "baseline";
  }
  return "?";
}

void ExperimentConfig::validate() const {
  if (n_runs < 1) throw Error("n_runs must be at least 1");
  if (threads < 1) throw Error("threads must be at least 1");
  if (method == Method::Ga) ga.validate();
}

SingleRun run_once(const Corpus& corpus, const ExperimentConfig& config, std::uint64_t seed) {
  auto [train, test] = split_corpus(corpus, seed);

  DecisionTree tree;
  switch (config.method) {
    case Method::Baseline:
      tree = hl_baseline_tree();
      break;
    case Method::Topdown: {
      const Vocabulary vocab = build_vocabulary(train, config.vocab);
      tree = induce_topdown(train, vocab, config.topdown);
      break;
    }
    case Method::Ga: {
      const Vocabulary vocab = build_vocabulary(train, config.vocab);
      GAParams params = config.ga;
      params.seed = seed;
      tree = induce_ga(train, vocab, params).best_tree;
      break;
    }
  }

  SingleRun run;
  run.train = evaluate(tree, train);
  run.test = evaluate(tree, test);
  run.tree = std::move(tree);
  return run;
}

ExperimentReport run_experiment(const Corpus& corpus, const ExperimentConfig& config) {
  config.validate();

  std::vector<SingleRun> runs(config.n_runs);
  if (config.threads <= 1 || config.n_runs == 1) {
    for (std::size_t i = 0; i < config.n_runs; ++i) {
      runs[i] = run_once(corpus, config, config.base_seed + i);
    }
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= config.n_runs) return;
        runs[i] = run_once(corpus, config, config.base_seed + i);
      }
    };
    std::vector<std::thread> threads;
    const std::size_t count = std::min(config.threads, config.n_runs);
    threads.reserve(count);
    for (std::size_t t = 0; t < count; ++t) threads.emplace_back(worker);
    for (std::thread& t : threads) t.join();
  }

  ExperimentReport report;
  report.per_run.reserve(config.n_runs);
  std::size_t best_index = 0;
  for (std::size_t i = 0; i < config.n_runs; ++i) {
    report.per_run.push_back(RunRecord{config.base_seed + i, runs[i].train, runs[i].test});
    // best-by-training selection, exact fraction compare, ties to lower seed
    const auto& cur = runs[i].train;
    const auto& best = runs[best_index].train;
    if (static_cast<unsigned long long>(cur.correct) * best.total >
        static_cast<unsigned long long>(best.correct) * cur.total) {
      best_index = i;
    }
  }
  report.best_tree = runs[best_index].tree;
  report.best_seed = config.base_seed + best_index;

  double sum_test = 0.0, sum_signed = 0.0, sum_abs = 0.0;
  report.max_test = report.per_run.front().test.percent();
  for (const RunRecord& r : report.per_run) {
    const double test = r.test.percent();
    report.max_test = std::max(report.max_test, test);
    sum_test += test;
    sum_signed += r.disparity();
    sum_abs += std::abs(r.disparity());
  }
  const double n = static_cast<double>(config.n_runs);
  report.mean_test = sum_test / n;
  report.mean_disparity_signed = sum_signed / n;
  report.mean_disparity_abs = sum_abs / n;
  return report;
}

std::vector<WordBreakdownRow> per_word_breakdown(const DecisionTree& tree, const Corpus& cases) {
  if (cases.empty()) throw EvaluationError("cannot evaluate over an empty case list");
  std::map<Token, WordBreakdownRow> rows;
  for (const TrainingCase& c : cases) {
    WordBreakdownRow& row = rows[c.at(0)];
    row.word = c.at(0);
    ++row.total;
    if (classify(tree, c) == c.sense) ++row.correct;
  }
  std::vector<WordBreakdownRow> out;
  out.reserve(rows.size());
  for (auto& [word, row] : rows) out.push_back(std::move(row));
  return out;
}

std::string export_report_tsv(const ExperimentReport& report) {
  std::string out = "# seed\ttrain\ttest\tdisparity\n";
  for (const RunRecord& r : report.per_run) {
    out += std::to_string(r.seed);
    out += '\t';
    out += format_percent(r.train.correct, r.train.total);
    out += '\t';
    out += format_percent(r.test.correct, r.test.total);
    out += '\t';
    out += format_fixed2(r.disparity());
    out += '\n';
  }
  out += "# summary\n";
  out += "max_test\t" + format_fixed2(report.max_test) + "\n";
  out += "mean_test\t" + format_fixed2(report.mean_test) + "\n";
  out += "mean_disparity_signed\t" + format_fixed2(report.mean_disparity_signed) + "\n";
  out += "mean_disparity_abs\t" + format_fixed2(report.mean_disparity_abs) + "\n";
  return out;
}

}  // namespace cluetree
