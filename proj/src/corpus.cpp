#include "cluetree/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cluetree/errors.hpp"
#include "cluetree/rng.hpp"

namespace cluetree {
namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

}  // namespace

TrainingCase make_training_case(SenseClass sense, const std::array<Token, kPositionCount>& context) {
  for (const Token& t : context) {
    if (!is_normalized_token(t)) throw Error("token '" + t + "' is not in normalized form");
  }
  const Token& clue = context[position_index(0)];
  if (!is_clue_word(clue)) throw Error("position 0 token '" + clue + "' is not a clue word");
  return TrainingCase{sense, context};
}

std::size_t Corpus::count_discourse() const {
  return static_cast<std::size_t>(std::count_if(
      cases.begin(), cases.end(), [](const TrainingCase& c) { return c.sense == SenseClass::Discourse; }));
}

Corpus parse_corpus(std::istream& in) {
  Corpus corpus;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;

    const auto fields = split_tabs(line);
    if (fields.size() != kPositionCount + 1) {
      throw ParseError("expected 7 tab-separated fields, got " + std::to_string(fields.size()), line_no);
    }

    try {
      std::array<Token, kPositionCount> context;
      for (std::size_t i = 0; i < kPositionCount; ++i) {
        context[i] = normalize_token(fields[i + 1]);
      }
      corpus.cases.push_back(make_training_case(sense_from_symbol(fields[0]), context));
    } catch (const Error& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  return corpus;
}

Corpus parse_corpus_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_corpus(in);
}

std::string serialize_corpus(const Corpus& corpus) {
  std::string out;
  for (const TrainingCase& c : corpus.cases) {
    out += sense_symbol(c.sense);
    for (const Token& t : c.context) {
      out += '\t';
      out += t;
    }
    out += '\n';
  }
  return out;
}

std::pair<Corpus, Corpus> split_corpus(const Corpus& corpus, std::uint64_t seed) {
  const std::size_t n = corpus.size();
  if (n < 2) throw SplitError("cannot split a corpus of fewer than 2 cases");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  Rng rng(seed);
  rng.shuffle(order);

  const std::size_t train_n = (n + 1) / 2;
  std::vector<std::size_t> train_idx(order.begin(), order.begin() + train_n);
  std::vector<std::size_t> test_idx(order.begin() + train_n, order.end());
  std::sort(train_idx.begin(), train_idx.end());
  std::sort(test_idx.begin(), test_idx.end());

  Corpus train, test;
  train.cases.reserve(train_n);
  test.cases.reserve(n - train_n);
  for (std::size_t i : train_idx) train.cases.push_back(corpus.cases[i]);
  for (std::size_t i : test_idx) test.cases.push_back(corpus.cases[i]);
  return {std::move(train), std::move(test)};
}

}  // namespace cluetree
