#pragma once

#include <cstdint>
#include <istream>
#include <string_view>
#include <vector>

#include "cluetree/corpus.hpp"
#include "cluetree/token.hpp"

namespace cluetree {

// Per-clue-word class counts driving corpus synthesis.
struct WordMarginal {
  Token word;
  std::size_t discourse_count = 0;
  std::size_t total_count = 0;
};

// TSV: word, discourse count, total count. '#' lines and blanks skipped.
std::vector<WordMarginal> parse_marginals(std::istream& in);
std::vector<WordMarginal> parse_marginals_text(std::string_view text);

// Builds a corpus that satisfies every marginal exactly and additionally
// pins the position -1 context partition: 189 cases preceded by <period>
// (185 discourse), 72 by <comma> (42 discourse), and 766 by neither (180
// discourse). The marginals must therefore sum to 1,027 cases and 407
// discourse, or synthesis fails. When the `and` and `say` rows are large
// enough, their slices get fixed -1 allocations so per-word scores over
// the generated corpus are stable across seeds. All remaining positions
// are dealt from a fixed 40-token lexicon whose frequencies keep exactly
// the 21 high-frequency tokens above the default general threshold on a
// half split. Deterministic in `seed`.
Corpus synth_corpus(const std::vector<WordMarginal>& marginals, std::uint64_t seed);

}  // namespace cluetree
