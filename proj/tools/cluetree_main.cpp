// cluetree: batch front-end for the clue-word sense disambiguation pipeline.
//
// Exit codes: 0 success, 1 usage error, 2 file or parse error, 3 validation
// error. Every randomized subcommand takes an explicit --seed so outputs
// are byte-reproducible.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cluetree/corpus.hpp"
#include "cluetree/errors.hpp"
#include "cluetree/format.hpp"
#include "cluetree/ga.hpp"
#include "cluetree/harness.hpp"
#include "cluetree/rules.hpp"
#include "cluetree/synth.hpp"
#include "cluetree/topdown.hpp"
#include "cluetree/tree.hpp"
#include "cluetree/vocabulary.hpp"

namespace {

using namespace cluetree;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) throw FileError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out.good()) throw FileError("cannot open '" + path + "' for writing");
  out << content;
  if (!out.good()) throw FileError("write to '" + path + "' failed");
}

Corpus load_corpus(const std::string& path) {
  std::istringstream in(read_file(path));
  return parse_corpus(in);
}

DecisionTree load_tree(const std::string& path) {
  return parse_tree(read_file(path));
}

std::vector<WordMarginal> load_marginals(const std::string& path) {
  std::istringstream in(read_file(path));
  return parse_marginals(in);
}

struct CliOptions {
  std::string marginals_file, train_file, tree_file, cases_file, corpus_file, out_file;
  std::uint64_t seed = 0;
  VocabularyConfig vocab;
  GAParams ga;
  TopDownParams topdown;
  std::string word;
  bool generalize = false;
  std::string method = "ga";
  std::size_t runs = 1;
  std::size_t threads = 1;
};

void add_ga_flags(CLI::App* cmd, GAParams& ga) {
  cmd->add_option("--pop", ga.population_size, "population size");
  cmd->add_option("--gens", ga.generations, "number of generations");
  cmd->add_option("--cx", ga.crossover_rate, "crossover rate");
  cmd->add_option("--mut", ga.mutation_rate, "mutation rate per individual");
  cmd->add_option("--tourn", ga.tournament_size, "tournament size");
  cmd->add_option("--elite", ga.elitism, "elite carry-over count");
  cmd->add_option("--max-depth", ga.max_depth, "maximum tree depth");
}

void add_topdown_flags(CLI::App* cmd, TopDownParams& td) {
  cmd->add_option("--min-cases", td.min_cases_per_split, "minimum cases to attempt a split");
  cmd->add_option("--max-depth", td.max_depth, "maximum tree depth");
}

int dispatch(const std::string& command, const CliOptions& opt) {
  if (command == "synth") {
    const Corpus corpus = synth_corpus(load_marginals(opt.marginals_file), opt.seed);
    write_file(opt.out_file, serialize_corpus(corpus));
    return 0;
  }
  if (command == "vocab") {
    const Vocabulary vocab = build_vocabulary(load_corpus(opt.train_file), opt.vocab);
    for (const Token& t : vocab.general) std::cout << "general\t" << t << "\n";
    for (const Token& t : vocab.clue) std::cout << "clue\t" << t << "\n";
    return 0;
  }
  if (command == "baseline") {
    write_file(opt.out_file, serialize_tree(hl_baseline_tree()) + "\n");
    return 0;
  }
  if (command == "induce-ga") {
    const Corpus train = load_corpus(opt.train_file);
    const Vocabulary vocab = build_vocabulary(train, opt.vocab);
    GAParams params = opt.ga;
    params.seed = opt.seed;
    const RunResult result = induce_ga(train, vocab, params);
    write_file(opt.out_file, serialize_tree(result.best_tree) + "\n");
    std::cout << "train " << evaluate(result.best_tree, train).summary() << "\n";
    return 0;
  }
  if (command == "induce-topdown") {
    const Corpus train = load_corpus(opt.train_file);
    const Vocabulary vocab = build_vocabulary(train, opt.vocab);
    const DecisionTree tree = induce_topdown(train, vocab, opt.topdown);
    write_file(opt.out_file, serialize_tree(tree) + "\n");
    std::cout << "train " << evaluate(tree, train).summary() << "\n";
    return 0;
  }
  if (command == "classify") {
    const DecisionTree tree = load_tree(opt.tree_file);
    for (const TrainingCase& c : load_corpus(opt.cases_file)) {
      std::cout << sense_symbol(classify(tree, c)) << "\n";
    }
    return 0;
  }
  if (command == "eval") {
    const DecisionTree tree = load_tree(opt.tree_file);
    std::cout << evaluate(tree, load_corpus(opt.cases_file)).summary() << "\n";
    return 0;
  }
  if (command == "rules") {
    const DecisionTree tree = load_tree(opt.tree_file);
    const Corpus cases = load_corpus(opt.cases_file);
    if (!opt.word.empty()) {
      const PerWordRules result = per_word_rules(tree, normalize_token(opt.word), cases);
      std::cout << export_rules_tsv(result.rules, RuleScope::SingleWord);
      std::cout << "# overall " << result.overall.summary() << "\n";
    } else if (opt.generalize) {
      std::cout << export_rules_tsv(generalized_rules(tree, cases), RuleScope::Generalized);
    } else {
      std::cout << export_rules_tsv(extract_rules(tree, cases), RuleScope::AllCases);
    }
    return 0;
  }
  if (command == "experiment") {
    ExperimentConfig cfg;
    cfg.method = method_from_name(opt.method);
    cfg.n_runs = opt.runs;
    cfg.base_seed = opt.seed;
    cfg.threads = opt.threads;
    cfg.ga = opt.ga;
    cfg.topdown = opt.topdown;
    cfg.vocab = opt.vocab;
    std::cout << export_report_tsv(run_experiment(load_corpus(opt.corpus_file), cfg));
    return 0;
  }
  throw Error("unhandled command '" + command + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"clue-word sense disambiguation with token-set decision trees"};
  app.require_subcommand(1);
  CliOptions opt;

  CLI::App* synth = app.add_subcommand("synth", "generate a marginal-matched corpus");
  synth->add_option("--marginals", opt.marginals_file, "marginals TSV")->required();
  synth->add_option("--seed", opt.seed, "generator seed")->required();
  synth->add_option("--out", opt.out_file, "output corpus file")->required();

  CLI::App* vocab = app.add_subcommand("vocab", "print the threshold-filtered vocabulary");
  vocab->add_option("--train", opt.train_file, "training corpus")->required();
  vocab->add_option("--general-threshold", opt.vocab.general_threshold, "general token threshold");
  vocab->add_option("--clue-threshold", opt.vocab.clue_threshold, "clue word threshold");

  CLI::App* baseline = app.add_subcommand("baseline", "write the fixed punctuation baseline tree");
  baseline->add_option("--out", opt.out_file, "output tree file")->required();

  CLI::App* induce = app.add_subcommand("induce", "induce a decision tree from training cases");
  induce->require_subcommand(1);
  CLI::App* induce_ga_cmd = induce->add_subcommand("ga", "genetic-algorithm induction");
  induce_ga_cmd->add_option("--train", opt.train_file, "training corpus")->required();
  induce_ga_cmd->add_option("--seed", opt.seed, "run seed")->required();
  induce_ga_cmd->add_option("--out", opt.out_file, "output tree file")->required();
  add_ga_flags(induce_ga_cmd, opt.ga);
  CLI::App* induce_td_cmd = induce->add_subcommand("topdown", "recursive partitioning induction");
  induce_td_cmd->add_option("--train", opt.train_file, "training corpus")->required();
  induce_td_cmd->add_option("--out", opt.out_file, "output tree file")->required();
  add_topdown_flags(induce_td_cmd, opt.topdown);

  CLI::App* classify_cmd = app.add_subcommand("classify", "classify cases with a tree");
  classify_cmd->add_option("--tree", opt.tree_file, "tree file")->required();
  classify_cmd->add_option("--cases", opt.cases_file, "cases file")->required();

  CLI::App* eval = app.add_subcommand("eval", "score a tree over cases");
  eval->add_option("--tree", opt.tree_file, "tree file")->required();
  eval->add_option("--cases", opt.cases_file, "cases file")->required();

  CLI::App* rules = app.add_subcommand("rules", "extract partition rules from a tree");
  rules->add_option("--tree", opt.tree_file, "tree file")->required();
  rules->add_option("--cases", opt.cases_file, "cases file")->required();
  CLI::Option* word_opt = rules->add_option("--word", opt.word, "restrict to one clue word");
  rules->add_flag("--generalize", opt.generalize, "pool shared conditions across words")
      ->excludes(word_opt);

  CLI::App* experiment = app.add_subcommand("experiment", "repeated split/induce/score runs");
  experiment->add_option("--corpus", opt.corpus_file, "corpus file")->required();
  experiment->add_option("--method", opt.method, "ga, topdown, or baseline")->required();
  experiment->add_option("--runs", opt.runs, "number of runs")->required();
  experiment->add_option("--seed", opt.seed, "base seed")->required();
  experiment->add_option("--threads", opt.threads, "worker threads");
  add_ga_flags(experiment, opt.ga);
  experiment->add_option("--min-cases", opt.topdown.min_cases_per_split, "topdown split bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }

  try {
    std::string command = app.get_subcommands().front()->get_name();
    if (command == "induce") {
      command += "-" + app.get_subcommands().front()->get_subcommands().front()->get_name();
    }
    return dispatch(command, opt);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const TreeParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const FileError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
