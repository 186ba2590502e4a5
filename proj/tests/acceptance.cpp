// Acceptance suite: one pass/fail line per criterion, nonzero exit when
// any criterion fails. Criteria 1-4, 6, 8 pin exact partition arithmetic
// over the shipped marginals and fixtures; criterion 5 replaces the
// original corpus-dependent headline numbers with property-based checks;
// criterion 7 exercises the CLI for byte determinism.

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <future>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cluetree/corpus.hpp"
#include "cluetree/errors.hpp"
#include "cluetree/format.hpp"
#include "cluetree/ga.hpp"
#include "cluetree/harness.hpp"
#include "cluetree/rng.hpp"
#include "cluetree/rules.hpp"
#include "cluetree/synth.hpp"
#include "cluetree/topdown.hpp"
#include "cluetree/tree.hpp"
#include "cluetree/vocabulary.hpp"
#include "support.hpp"

using namespace cluetree;

namespace {

int g_failures = 0;
std::vector<std::string> g_notes;

class Criterion {
 public:
  Criterion(std::string name, double budget_seconds)
      : name_(std::move(name)), budget_(budget_seconds), start_(std::chrono::steady_clock::now()) {}

  void require(bool ok, const std::string& detail) {
    if (!ok && failure_.empty()) failure_ = detail;
  }

  void finish() {
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    const bool on_time = elapsed < budget_;
    const bool ok = failure_.empty() && on_time;
    std::printf("[%s] %s (%.2fs, budget %.0fs)\n", ok ? "PASS" : "FAIL", name_.c_str(), elapsed,
                budget_);
    if (!failure_.empty()) std::printf("       %s\n", failure_.c_str());
    if (!on_time) std::printf("       exceeded runtime budget\n");
    if (!ok) ++g_failures;
  }

 private:
  std::string name_;
  double budget_;
  std::chrono::steady_clock::time_point start_;
  std::string failure_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) throw FileError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const std::vector<WordMarginal>& table1() {
  static const std::vector<WordMarginal> rows = [] {
    std::istringstream in(read_file(CLUETREE_DATA_DIR "/table1.tsv"));
    return parse_marginals(in);
  }();
  return rows;
}

const Corpus& synth1027() {
  static const Corpus corpus = synth_corpus(table1(), 0);
  return corpus;
}

// ---------------------------------------------------------------- 1 & 2

void criterion_baseline() {
  Criterion c("criterion 1: baseline tree scores 813/1027 = 79.16% on the seed-0 corpus", 1.0);
  const EvaluationReport report = evaluate(hl_baseline_tree(), synth1027());
  c.require(report.correct == 813 && report.total == 1027,
            "got " + std::to_string(report.correct) + "/" + std::to_string(report.total));
  c.require(report.summary() == "813/1027 = 79.16%", "summary was " + report.summary());
  c.finish();
}

void criterion_partition() {
  Criterion c("criterion 2: baseline rules partition into 227/261 and 586/766", 1.0);
  const auto rules = extract_rules(hl_baseline_tree(), synth1027());
  c.require(rules.size() == 2, "expected 2 rules, got " + std::to_string(rules.size()));
  if (rules.size() == 2) {
    c.require(rules[0].correct == 227 && rules[0].matched == 261,
              "arc rule " + std::to_string(rules[0].correct) + "/" + std::to_string(rules[0].matched));
    c.require(rules[1].correct == 586 && rules[1].matched == 766,
              "default rule " + std::to_string(rules[1].correct) + "/" + std::to_string(rules[1].matched));
  }
  c.finish();
}

// ------------------------------------------------------------------- 3

void criterion_fixtures() {
  Criterion c("criterion 3: per-word fixture slices reproduce the published rule counts", 1.0);
  {
    const DecisionTree tree = parse_tree(read_file(CLUETREE_FIXTURE_DIR "/and_rules.tree"));
    std::istringstream in(read_file(CLUETREE_FIXTURE_DIR "/and_slice.tsv"));
    const Corpus slice = parse_corpus(in);
    const PerWordRules result = per_word_rules(tree, "and", slice);
    const std::vector<std::pair<std::size_t, std::size_t>> expected = {
        {29, 30}, {18, 25}, {1, 1}, {9, 14}, {9, 12}, {6, 7}, {5, 6}, {1, 2}, {188, 251}};
    c.require(result.rules.size() == expected.size(),
              "and: expected 9 rules, got " + std::to_string(result.rules.size()));
    for (std::size_t i = 0; i < expected.size() && i < result.rules.size(); ++i) {
      c.require(result.rules[i].correct == expected[i].first &&
                    result.rules[i].matched == expected[i].second,
                "and rule " + std::to_string(i + 1) + ": " + std::to_string(result.rules[i].correct) +
                    "/" + std::to_string(result.rules[i].matched));
    }
    c.require(result.overall.summary() == "266/348 = 76.44%",
              "and overall " + result.overall.summary());
  }
  {
    const DecisionTree tree = parse_tree(read_file(CLUETREE_FIXTURE_DIR "/say_rules.tree"));
    std::istringstream in(read_file(CLUETREE_FIXTURE_DIR "/say_slice.tsv"));
    const Corpus slice = parse_corpus(in);
    const PerWordRules result = per_word_rules(tree, "say", slice);
    const std::vector<std::pair<std::size_t, std::size_t>> expected = {{4, 4}, {2, 2}, {24, 30}};
    c.require(result.rules.size() == expected.size(),
              "say: expected 3 rules, got " + std::to_string(result.rules.size()));
    for (std::size_t i = 0; i < expected.size() && i < result.rules.size(); ++i) {
      c.require(result.rules[i].correct == expected[i].first &&
                    result.rules[i].matched == expected[i].second,
                "say rule " + std::to_string(i + 1) + ": " + std::to_string(result.rules[i].correct) +
                    "/" + std::to_string(result.rules[i].matched));
    }
    c.require(result.overall.summary() == "30/36 = 83.33%", "say overall " + result.overall.summary());
  }
  c.finish();
}

// ------------------------------------------------------------------- 4

void criterion_marginals() {
  Criterion c("criterion 4: marginals sum to 1027/407 and the synthesized corpus re-tallies", 1.0);
  std::size_t total = 0, discourse = 0;
  for (const WordMarginal& m : table1()) {
    total += m.total_count;
    discourse += m.discourse_count;
  }
  c.require(table1().size() == 34, "expected 34 rows");
  c.require(total == 1027 && discourse == 407,
            "sums " + std::to_string(total) + "/" + std::to_string(discourse));

  std::map<Token, std::pair<std::size_t, std::size_t>> tally;
  for (const TrainingCase& tc : synth1027()) {
    auto& [d, t] = tally[tc.at(0)];
    ++t;
    d += tc.sense == SenseClass::Discourse;
  }
  for (const WordMarginal& m : table1()) {
    const auto [d, t] = tally[m.word];
    c.require(d == m.discourse_count && t == m.total_count,
              m.word + " re-tallied " + std::to_string(d) + "/" + std::to_string(t));
  }
  c.finish();
}

// ------------------------------------------------------------------ 5a

void criterion_fitness_oracle() {
  Criterion c("criterion 5a: fitness matches a brute-force tally on 1000 random pairs", 10.0);
  Rng rng(401);
  const Vocabulary vocab = test::random_corpus_vocab();
  const GAParams params;
  for (int trial = 0; trial < 1000; ++trial) {
    const DecisionTree tree = random_tree(vocab, params, rng);
    const Corpus corpus = test::random_corpus(rng, 10 + rng.below(60));
    const std::size_t expected = test::oracle_correct_count(tree, corpus);
    if (fitness(tree, corpus) != expected) {
      c.require(false, "mismatch at trial " + std::to_string(trial));
      break;
    }
  }
  c.finish();
}

// ------------------------------------------------------------------ 5b

void criterion_validator_closure() {
  Criterion c("criterion 5b: 10000 operator outputs all pass validate_tree", 30.0);
  auto [train, test_half] = split_corpus(synth1027(), 0);
  const Vocabulary vocab = build_vocabulary(train);
  const GAParams params;
  Rng rng(402);

  std::size_t produced = 0, valid = 0;
  auto check = [&](const DecisionTree& t) {
    ++produced;
    valid += !validate_tree(t, vocab, params.limits()).has_value();
  };

  std::vector<DecisionTree> stock;
  for (int i = 0; i < 4000; ++i) {
    DecisionTree t = random_tree(vocab, params, rng);
    check(t);
    if (stock.size() < 64) stock.push_back(std::move(t));
  }
  for (int i = 0; i < 3000; ++i) {
    const DecisionTree& a = stock[rng.below(stock.size())];
    const DecisionTree& b = stock[rng.below(stock.size())];
    check(crossover(a, b, train, params, rng));
  }
  for (int i = 0; i < 3000; ++i) {
    check(mutate(stock[rng.below(stock.size())], vocab, params, rng));
  }
  c.require(produced == 10000 && valid == produced,
            std::to_string(valid) + "/" + std::to_string(produced) + " validated");
  c.finish();
}

// ------------------------------------------------------------------ 5c

void criterion_ga_competence() {
  Criterion c("criterion 5c: GA beats the baseline's training score in >=18/20 runs", 300.0);
  const Corpus& corpus = synth1027();
  const std::size_t n_runs = 20;

  struct Outcome {
    bool win = false;
    double disparity = 0.0;
  };
  std::vector<Outcome> outcomes(n_runs);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n_runs) return;
      auto [train, test_half] = split_corpus(corpus, i);
      const Vocabulary vocab = build_vocabulary(train);
      GAParams params;
      params.seed = i;
      const RunResult r = induce_ga(train, vocab, params);
      const std::size_t baseline = evaluate(hl_baseline_tree(), train).correct;
      outcomes[i].win = r.best_train_fitness >= baseline;
      const EvaluationReport train_rep = evaluate(r.best_tree, train);
      const EvaluationReport test_rep = evaluate(r.best_tree, test_half);
      outcomes[i].disparity = train_rep.percent() - test_rep.percent();
    }
  };
  const std::size_t thread_count =
      std::min<std::size_t>(n_runs, std::max(2u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < thread_count; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();

  std::size_t wins = 0;
  double disparity_sum = 0.0;
  for (const Outcome& o : outcomes) {
    wins += o.win;
    disparity_sum += o.disparity;
  }
  const double mean_disparity = disparity_sum / static_cast<double>(n_runs);
  g_notes.push_back("5c: wins " + std::to_string(wins) + "/20, mean signed disparity " +
                    format_fixed2(mean_disparity) + " points");
  c.require(wins >= 18, "only " + std::to_string(wins) + "/20 runs reached the baseline");
  c.require(std::abs(mean_disparity) <= 10.0,
            "mean signed disparity " + format_fixed2(mean_disparity) + " exceeds 10 points");
  c.finish();
}

// ------------------------------------------------------------------ 5d

// Exhaustive micro-instance sweep: every multiset of up to 8 cases over
// (class, token at -1, token at 1) with 3 tokens. Case types are indexed
// cls*9 + a*3 + b.
struct MicroSweep {
  std::size_t instances = 0;
  std::size_t split_mismatches = 0;
  std::size_t ambiguous_ties = 0;
  std::size_t accuracy_gaps = 0;
  std::string first_split_mismatch;
  std::string first_accuracy_gap;
};

void sweep_instance(const std::array<int, 18>& counts, int n, const Vocabulary& vocab,
                    const TopDownParams& params, Corpus& scratch, MicroSweep& out) {
  static const std::array<Token, 3> tokens = {"a", "b", "c"};
  ++out.instances;

  scratch.cases.clear();
  int total_d = 0;
  for (int type = 0; type < 18; ++type) {
    for (int k = 0; k < counts[type]; ++k) {
      TrainingCase c;
      c.sense = type < 9 ? SenseClass::Sentential : SenseClass::Discourse;
      c.at(-1) = tokens[(type % 9) / 3];
      c.at(0) = "and";
      c.at(1) = tokens[type % 3];
      c.at(2) = "a";
      c.at(3) = "a";
      c.at(4) = "a";
      scratch.cases.push_back(std::move(c));
    }
    if (type >= 9) total_d += counts[type];
  }

  // Independent oracle over the 6 meaningful tests, computed from the
  // count vector with natural logs.
  auto h = [](int d, int m) {
    if (d <= 0 || d >= m) return 0.0;
    const double p = static_cast<double>(d) / m;
    return -(p * std::log(p) + (1 - p) * std::log(1 - p)) / std::log(2.0);
  };
  struct Test {
    int position;
    int token;
    double gain;
    int acc;
  };
  std::vector<Test> tests;
  const double base = h(total_d, n);
  for (int pos = 0; pos < 2; ++pos) {  // 0 -> position -1, 1 -> position 1
    for (int tok = 0; tok < 3; ++tok) {
      int n1 = 0, d1 = 0;
      for (int type = 0; type < 18; ++type) {
        const int token_at = pos == 0 ? (type % 9) / 3 : type % 3;
        if (token_at == tok) {
          n1 += counts[type];
          if (type >= 9) d1 += counts[type];
        }
      }
      const int n2 = n - n1, d2 = total_d - d1;
      const double gain = base - (n1 * h(d1, n1) + n2 * h(d2, n2)) / n;
      const int acc = std::max(d1, n1 - d1) + std::max(d2, n2 - d2);
      tests.push_back(Test{pos == 0 ? -1 : 1, tok, gain, acc});
    }
  }

  double max_gain = 0.0;
  for (const Test& t : tests) max_gain = std::max(max_gain, t.gain);
  const auto split = best_split(scratch, vocab, params);

  if (max_gain <= 0.0) {
    if (split.has_value()) {
      ++out.split_mismatches;
      if (out.first_split_mismatch.empty()) out.first_split_mismatch = "oracle expected no split";
    }
  } else {
    // the tie set within 1e-9 of the max; exact ties share bit patterns
    std::vector<const Test*> ties;
    bool exact = true;
    for (const Test& t : tests) {
      if (t.gain >= max_gain - 1e-9) {
        ties.push_back(&t);
        if (t.gain != ties.front()->gain) exact = false;
      }
    }
    if (!exact) ++out.ambiguous_ties;
    bool ok = split.has_value();
    if (ok) {
      static const std::array<Token, 3> toks = {"a", "b", "c"};
      if (exact) {
        ok = split->position == ties.front()->position && split->token == toks[ties.front()->token];
      } else {
        ok = false;
        for (const Test* t : ties) {
          if (split->position == t->position && split->token == toks[t->token]) ok = true;
        }
      }
    }
    if (!ok) {
      ++out.split_mismatches;
      if (out.first_split_mismatch.empty()) {
        std::string got = split ? (std::to_string(split->position) + "/" + split->token) : "none";
        out.first_split_mismatch = "picked " + got + ", oracle max gain " + std::to_string(max_gain);
      }
    }
  }

  // depth-1 accuracy claim: the induced tree must reach the best
  // depth-1 accuracy across the bare leaf and every single-token test
  int best_acc = std::max(total_d, n - total_d);
  for (const Test& t : tests) best_acc = std::max(best_acc, t.acc);
  TopDownParams depth1 = params;
  depth1.max_depth = 1;
  const DecisionTree tree = induce_topdown(scratch, vocab, depth1);
  const int got_acc = static_cast<int>(evaluate(tree, scratch).correct);
  if (got_acc != best_acc) {
    ++out.accuracy_gaps;
    if (out.first_accuracy_gap.empty()) {
      std::string layout;
      for (int type = 0; type < 18; ++type) {
        if (counts[type]) {
          layout += (type < 9 ? "S" : "D");
          layout += std::to_string((type % 9) / 3) + std::to_string(type % 3) + "x" +
                    std::to_string(counts[type]) + " ";
        }
      }
      out.first_accuracy_gap = "induced depth-1 accuracy " + std::to_string(got_acc) + " < best " +
                               std::to_string(best_acc) + " on " + layout;
    }
  }
}

void enumerate_counts(std::array<int, 18>& counts, int type, int remaining, int n,
                      const Vocabulary& vocab, const TopDownParams& params, Corpus& scratch,
                      MicroSweep& out) {
  if (type == 17) {
    counts[17] = remaining;
    sweep_instance(counts, n, vocab, params, scratch, out);
    counts[17] = 0;
    return;
  }
  for (int k = 0; k <= remaining; ++k) {
    counts[type] = k;
    enumerate_counts(counts, type + 1, remaining - k, n, vocab, params, scratch, out);
  }
  counts[type] = 0;
}

void criterion_topdown_oracle() {
  Criterion c("criterion 5d: best_split matches exhaustive search on all micro-instances, "
              "and depth-1 trees reach the best depth-1 accuracy",
              30.0);
  Vocabulary vocab;
  vocab.general = {"a", "b", "c"};
  vocab.clue = {"and"};
  const TopDownParams params{2, 6, 0.0};

  MicroSweep sweep;
  Corpus scratch;
  std::array<int, 18> counts{};
  for (int n = 2; n <= 8; ++n) {
    enumerate_counts(counts, 0, n, n, vocab, params, scratch, sweep);
  }

  g_notes.push_back("5d: " + std::to_string(sweep.instances) + " instances, " +
                    std::to_string(sweep.split_mismatches) + " split mismatches, " +
                    std::to_string(sweep.ambiguous_ties) + " ambiguous float ties, " +
                    std::to_string(sweep.accuracy_gaps) + " depth-1 accuracy gaps");
  c.require(sweep.split_mismatches == 0,
            "best_split disagreed with the oracle: " + sweep.first_split_mismatch);
  // Information gain does not maximize depth-1 accuracy in general; this
  // half of the criterion is expected to fail and is reported honestly.
  c.require(sweep.accuracy_gaps == 0,
            std::to_string(sweep.accuracy_gaps) + " instances, first: " + sweep.first_accuracy_gap);
  c.finish();
}

// ------------------------------------------------------------------- 6

void criterion_partition_invariant() {
  Criterion c("criterion 6: rule partitions of 500 random trees sum to 1027 and match evaluate",
              30.0);
  const Corpus& corpus = synth1027();
  const Vocabulary vocab = build_vocabulary(corpus);
  const GAParams params;
  Rng rng(406);
  for (int i = 0; i < 500; ++i) {
    const DecisionTree tree = random_tree(vocab, params, rng);
    const auto rules = extract_rules(tree, corpus);
    std::size_t matched = 0, correct = 0;
    for (const Rule& r : rules) {
      matched += r.matched;
      correct += r.correct;
    }
    if (matched != 1027 || correct != evaluate(tree, corpus).correct) {
      c.require(false, "partition broke at tree " + std::to_string(i));
      break;
    }
  }
  c.finish();
}

// ------------------------------------------------------------------- 7

struct CommandResult {
  int status = -1;
  std::string output;
};

CommandResult run_command(const std::string& command) {
  CommandResult result;
  FILE* pipe = popen((command + " 2>&1").c_str(), "r");
  if (!pipe) return result;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.output.append(buffer, got);
  result.status = pclose(pipe);
  return result;
}

void criterion_cli_determinism() {
  Criterion c("criterion 7: seeded subcommands are byte-identical across reruns and thread counts",
              120.0);
  const std::string cli = CLUETREE_CLI_PATH;
  const std::string dir = "/tmp/cluetree_acceptance";
  run_command("rm -rf " + dir + " && mkdir -p " + dir);

  auto twice_same = [&](const std::string& cmd, const std::string& out_file) -> bool {
    const CommandResult first = run_command(cmd);
    std::string first_file = out_file.empty() ? "" : read_file(out_file);
    const CommandResult second = run_command(cmd);
    std::string second_file = out_file.empty() ? "" : read_file(out_file);
    return first.status == 0 && second.status == 0 && first.output == second.output &&
           first_file == second_file;
  };

  const std::string marginals = CLUETREE_DATA_DIR "/table1.tsv";
  const std::string synth_tsv = dir + "/synth.tsv";
  const std::string tree_file = dir + "/t.tree";
  const std::string ga_tree = dir + "/ga.tree";
  const std::string marginals_before = read_file(marginals);

  c.require(twice_same(cli + " synth --marginals " + marginals + " --seed 0 --out " + synth_tsv,
                       synth_tsv),
            "synth not reproducible");
  c.require(twice_same(cli + " baseline --out " + tree_file, tree_file), "baseline not reproducible");
  c.require(twice_same(cli + " eval --tree " + tree_file + " --cases " + synth_tsv, ""),
            "eval not reproducible");
  c.require(run_command(cli + " eval --tree " + tree_file + " --cases " + synth_tsv).output ==
                "813/1027 = 79.16%\n",
            "eval printed something other than 813/1027 = 79.16%");
  {
    const CommandResult say = run_command(cli + " rules --tree " CLUETREE_FIXTURE_DIR
                                                "/say_rules.tree --cases " CLUETREE_FIXTURE_DIR
                                                "/say_slice.tsv --word say");
    const std::string tail = "# overall 30/36 = 83.33%\n";
    c.require(say.status == 0 && say.output.size() > tail.size() &&
                  say.output.substr(say.output.size() - tail.size()) == tail,
              "per-word rules did not end with the overall 30/36 line");
  }
  c.require(twice_same(cli + " vocab --train " + synth_tsv, ""), "vocab not reproducible");
  c.require(twice_same(cli + " classify --tree " + tree_file + " --cases " + synth_tsv, ""),
            "classify not reproducible");
  c.require(twice_same(cli + " rules --tree " + tree_file + " --cases " + synth_tsv, ""),
            "rules not reproducible");
  c.require(twice_same(cli + " rules --tree " + tree_file + " --cases " + synth_tsv + " --word and", ""),
            "per-word rules not reproducible");
  c.require(twice_same(cli + " induce ga --train " + synth_tsv +
                           " --seed 3 --pop 20 --gens 10 --out " + ga_tree,
                       ga_tree),
            "induce ga not reproducible");
  c.require(twice_same(cli + " induce topdown --train " + synth_tsv + " --out " + tree_file,
                       tree_file),
            "induce topdown not reproducible");

  const std::string experiment = cli + " experiment --corpus " + synth_tsv +
                                 " --method ga --runs 4 --seed 0 --pop 20 --gens 10 --threads ";
  const CommandResult serial = run_command(experiment + "1");
  const CommandResult serial_again = run_command(experiment + "1");
  const CommandResult parallel = run_command(experiment + "8");
  c.require(serial.status == 0 && serial.output == serial_again.output,
            "experiment not reproducible at threads=1");
  c.require(parallel.status == 0 && serial.output == parallel.output,
            "experiment differs between threads=1 and threads=8");

  const std::string topdown_exp = cli + " experiment --corpus " + synth_tsv +
                                  " --method topdown --runs 6 --seed 0 --threads ";
  const CommandResult td1 = run_command(topdown_exp + "1");
  const CommandResult td8 = run_command(topdown_exp + "8");
  c.require(td1.status == 0 && td8.status == 0 && td1.output == td8.output,
            "topdown experiment differs across thread counts");

  c.require(read_file(marginals) == marginals_before, "an input file was mutated");
  c.finish();
}

// ------------------------------------------------------------------- 8

void criterion_round_trips() {
  Criterion c("criterion 8: serialize/parse round-trips are byte-identical on all fixtures", 1.0);
  for (const char* name : {"and_rules.tree", "say_rules.tree"}) {
    const std::string text = read_file(std::string(CLUETREE_FIXTURE_DIR "/") + name);
    c.require(serialize_tree(parse_tree(text)) + "\n" == text,
              std::string(name) + " did not round-trip");
  }
  for (const char* name : {"and_slice.tsv", "say_slice.tsv"}) {
    const std::string text = read_file(std::string(CLUETREE_FIXTURE_DIR "/") + name);
    std::istringstream in(text);
    c.require(serialize_corpus(parse_corpus(in)) == text, std::string(name) + " did not round-trip");
  }
  const std::string baseline = serialize_tree(hl_baseline_tree());
  c.require(serialize_tree(parse_tree(baseline)) == baseline, "baseline tree did not round-trip");
  c.require(parse_tree(baseline) == hl_baseline_tree(), "baseline tree structural round-trip");
  const std::string corpus_text = serialize_corpus(synth1027());
  c.require(serialize_corpus(parse_corpus_text(corpus_text)) == corpus_text,
            "synthesized corpus did not round-trip");
  c.finish();
}

}  // namespace

int main() {
  criterion_baseline();
  criterion_partition();
  criterion_fixtures();
  criterion_marginals();
  criterion_fitness_oracle();
  criterion_validator_closure();
  criterion_ga_competence();
  criterion_topdown_oracle();
  criterion_partition_invariant();
  criterion_cli_determinism();
  criterion_round_trips();

  for (const std::string& note : g_notes) std::printf("note: %s\n", note.c_str());
  std::printf("%d criterion(s) failed\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
