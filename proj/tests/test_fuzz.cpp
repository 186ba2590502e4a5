#include <doctest.h>

#include <string>

#include "cluetree/corpus.hpp"
#include "cluetree/errors.hpp"
#include "cluetree/ga.hpp"
#include "cluetree/rng.hpp"
#include "cluetree/tree.hpp"
#include "support.hpp"

using namespace cluetree;

// Corrupted inputs must come back as typed parse errors, never crashes or
// silent acceptance of malformed structure.

namespace {

std::string corrupt(const std::string& text, Rng& rng) {
  std::string out = text;
  const std::size_t edits = 1 + rng.below(4);
  for (std::size_t e = 0; e < edits && !out.empty(); ++e) {
    const std::size_t at = rng.below(out.size());
    switch (rng.below(3)) {
      case 0:
        out.erase(at, 1);
        break;
      case 1:
        out.insert(at, 1, static_cast<char>(' ' + rng.below(95)));
        break;
      default:
        out[at] = static_cast<char>(' ' + rng.below(95));
        break;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("corrupted tree text parses or fails with a typed error") {
  Rng rng(606);
  const Vocabulary vocab = test::random_corpus_vocab();
  const GAParams params;
  std::size_t parsed = 0, rejected = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const std::string text = serialize_tree(random_tree(vocab, params, rng));
    const std::string bad = corrupt(text, rng);
    try {
      const DecisionTree t = parse_tree(bad);
      // whatever survives must re-serialize through a clean round trip
      CHECK(serialize_tree(parse_tree(serialize_tree(t))) == serialize_tree(t));
      ++parsed;
    } catch (const TreeParseError&) {
      ++rejected;
    } catch (const Error&) {
      ++rejected;  // e.g. an arc emptied by the corruption
    }
  }
  CHECK(parsed + rejected == 2000);
  CHECK(rejected > 100);
}

TEST_CASE("corrupted corpus text parses or fails with a typed error") {
  Rng rng(607);
  std::size_t parsed = 0, rejected = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const std::string text = serialize_corpus(test::random_corpus(rng, 1 + rng.below(5)));
    const std::string bad = corrupt(text, rng);
    try {
      const Corpus c = parse_corpus_text(bad);
      CHECK(serialize_corpus(parse_corpus_text(serialize_corpus(c))) == serialize_corpus(c));
      ++parsed;
    } catch (const ParseError&) {
      ++rejected;
    }
  }
  CHECK(parsed + rejected == 2000);
  CHECK(rejected > 100);
}
