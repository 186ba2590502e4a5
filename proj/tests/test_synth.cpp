#include <doctest.h>

#include <fstream>
#include <map>

#include "cluetree/corpus.hpp"
#include "cluetree/errors.hpp"
#include "cluetree/synth.hpp"
#include "cluetree/vocabulary.hpp"

using namespace cluetree;

namespace {

std::vector<WordMarginal> table1() {
  std::ifstream in(CLUETREE_DATA_DIR "/table1.tsv");
  REQUIRE(in.good());
  return parse_marginals(in);
}

}  // namespace

TEST_CASE("marginals file carries 34 rows summing to 1027/407") {
  const auto rows = table1();
  REQUIRE(rows.size() == 34);
  std::size_t total = 0, discourse = 0;
  for (const auto& r : rows) {
    total += r.total_count;
    discourse += r.discourse_count;
  }
  CHECK(total == 1027);
  CHECK(discourse == 407);
  CHECK(rows.front().word == "and");
  CHECK(rows.front().discourse_count == 137);
  CHECK(rows.front().total_count == 348);
}

TEST_CASE("parse_marginals rejects malformed rows") {
  CHECK_THROWS_AS(parse_marginals_text("and\t137\n"), ParseError);
  CHECK_THROWS_AS(parse_marginals_text("and\tabc\t348\n"), ParseError);
  CHECK_THROWS_AS(parse_marginals_text("and\t400\t348\n"), ParseError);
}

TEST_CASE("synth_corpus satisfies every marginal it was given") {
  const Corpus corpus = synth_corpus(table1(), 0);
  REQUIRE(corpus.size() == 1027);
  CHECK(corpus.count_discourse() == 407);

  std::map<Token, std::pair<std::size_t, std::size_t>> tally;  // word -> (discourse, total)
  for (const TrainingCase& c : corpus) {
    auto& [d, t] = tally[c.at(0)];
    ++t;
    if (c.sense == SenseClass::Discourse) ++d;
  }
  for (const WordMarginal& m : table1()) {
    CHECK(tally[m.word].first == m.discourse_count);
    CHECK(tally[m.word].second == m.total_count);
  }
  CHECK(tally["and"].first == 137);
  CHECK(tally["and"].second == 348);
}

TEST_CASE("synth_corpus pins the -1 context partition") {
  const Corpus corpus = synth_corpus(table1(), 0);
  std::size_t p = 0, pd = 0, c = 0, cd = 0, o = 0, od = 0;
  for (const TrainingCase& tc : corpus) {
    const bool d = tc.sense == SenseClass::Discourse;
    if (tc.at(-1) == kPeriod) {
      ++p;
      pd += d;
    } else if (tc.at(-1) == kComma) {
      ++c;
      cd += d;
    } else {
      ++o;
      od += d;
    }
  }
  CHECK(p == 189);
  CHECK(pd == 185);
  CHECK(c == 72);
  CHECK(cd == 42);
  CHECK(o == 766);
  CHECK(od == 180);
}

TEST_CASE("synth_corpus is deterministic in the seed") {
  const auto rows = table1();
  CHECK(serialize_corpus(synth_corpus(rows, 0)) == serialize_corpus(synth_corpus(rows, 0)));
  CHECK(serialize_corpus(synth_corpus(rows, 0)) != serialize_corpus(synth_corpus(rows, 1)));
}

TEST_CASE("synth_corpus rejects infeasible marginals") {
  auto rows = table1();
  rows.pop_back();  // totals no longer reach 1027
  CHECK_THROWS_AS(synth_corpus(rows, 0), SynthesisError);

  rows = table1();
  rows[0].word = "hello";
  CHECK_THROWS_AS(synth_corpus(rows, 0), SynthesisError);

  rows = table1();
  // shift 200 discourse cases away: sum of discourse falls below 407
  rows[0].discourse_count = 0;
  rows[0].total_count = 211;
  rows[1].total_count += 137;
  CHECK_THROWS_AS(synth_corpus(rows, 0), SynthesisError);
}

TEST_CASE("seed-0 half split yields exactly the 21-token general vocabulary") {
  const Corpus corpus = synth_corpus(table1(), 0);
  auto [train, test_half] = split_corpus(corpus, 0);
  REQUIRE(train.size() == 514);
  REQUIRE(test_half.size() == 513);

  const Vocabulary vocab = build_vocabulary(train);
  const std::vector<Token> expected = {
      Token(kApostropheS), Token(kComma), Token(kPeriod),
      "a", "and", "are", "as", "at", "can", "for", "i", "in", "is", "it",
      "of", "that", "the", "this", "to", "we", "you"};
  CHECK(vocab.general == expected);
  for (const Token& t : vocab.clue) CHECK(is_clue_word(t));
  // high-count clue words always clear the threshold on a half split
  for (const Token& t : {"and", "now", "so", "like", "but", "or", "say", "well", "look"}) {
    CHECK(vocab.clue_contains(t));
  }
}
