#include "cluetree/synth.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <unordered_set>

#include "cluetree/errors.hpp"
#include "cluetree/rng.hpp"

namespace cluetree {
namespace {

// Position -1 context partition the generator reproduces exactly.
constexpr std::size_t kPeriodCases = 189, kPeriodDiscourse = 185;
constexpr std::size_t kCommaCases = 72, kCommaDiscourse = 42;
constexpr std::size_t kOtherCases = 766, kOtherDiscourse = 180;
constexpr std::size_t kTotalCases = kPeriodCases + kCommaCases + kOtherCases;
constexpr std::size_t kTotalDiscourse = kPeriodDiscourse + kCommaDiscourse + kOtherDiscourse;

// The 21 tokens meant to clear the general threshold, followed by 19
// low-frequency fillers that never can (each is dealt exactly 15 times).
const std::vector<Token>& high_lexicon() {
  static const std::vector<Token> tokens = {
      Token(kPeriod), Token(kComma), Token(kApostropheS),
      "a", "and", "are", "as", "at", "can", "for", "i", "in", "is", "it",
      "of", "that", "the", "this", "to", "we", "you"};
  return tokens;
}

const std::vector<Token>& filler_lexicon() {
  static const std::vector<Token> tokens = {
      "people", "system", "work", "what", "do", "have", "be", "not", "was",
      "one", "about", "think", "going", "know", "very", "more", "all",
      "with", "on"};
  return tokens;
}

constexpr std::size_t kFillerOccurrences = 15;

// How many of a word's discourse/sentential cases carry <period> or
// <comma> at position -1.
struct ContextQuota {
  std::size_t d_period = 0, d_comma = 0;
  std::size_t s_period = 0, s_comma = 0;
};

std::size_t parse_count_field(std::string_view field, std::size_t line_no) {
  std::size_t value = 0;
  const auto* begin = field.data();
  const auto* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError("bad count '" + std::string(field) + "'", line_no);
  }
  return value;
}

}  // namespace

std::vector<WordMarginal> parse_marginals(std::istream& in) {
  std::vector<WordMarginal> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;

    std::size_t tab1 = line.find('\t');
    std::size_t tab2 = tab1 == std::string::npos ? std::string::npos : line.find('\t', tab1 + 1);
    if (tab1 == std::string::npos || tab2 == std::string::npos ||
        line.find('\t', tab2 + 1) != std::string::npos) {
      throw ParseError("expected 3 tab-separated fields", line_no);
    }

    WordMarginal row;
    try {
      row.word = normalize_token(std::string_view(line).substr(0, tab1));
    } catch (const NormalizeError& e) {
      throw ParseError(e.what(), line_no);
    }
    row.discourse_count = parse_count_field(std::string_view(line).substr(tab1 + 1, tab2 - tab1 - 1), line_no);
    row.total_count = parse_count_field(std::string_view(line).substr(tab2 + 1), line_no);
    if (row.discourse_count > row.total_count) {
      throw ParseError("discourse count exceeds total for '" + row.word + "'", line_no);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<WordMarginal> parse_marginals_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_marginals(in);
}

Corpus synth_corpus(const std::vector<WordMarginal>& marginals, std::uint64_t seed) {
  if (marginals.empty()) throw SynthesisError("no marginals given");

  std::size_t sum_total = 0, sum_discourse = 0;
  std::unordered_set<Token> seen;
  for (const WordMarginal& m : marginals) {
    if (!is_clue_word(m.word)) throw SynthesisError("'" + m.word + "' is not a clue word");
    if (m.discourse_count > m.total_count) {
      throw SynthesisError("discourse count exceeds total for '" + m.word + "'");
    }
    if (!seen.insert(m.word).second) throw SynthesisError("duplicate marginal for '" + m.word + "'");
    sum_total += m.total_count;
    sum_discourse += m.discourse_count;
  }
  if (sum_total != kTotalCases || sum_discourse != kTotalDiscourse) {
    throw SynthesisError(
        "marginals are jointly infeasible with the -1 context partition: need " +
        std::to_string(kTotalCases) + " cases / " + std::to_string(kTotalDiscourse) +
        " discourse, got " + std::to_string(sum_total) + " / " + std::to_string(sum_discourse));
  }

  // Allocate per-word -1 context quotas. `and` and `say` get fixed
  // allocations (when their marginals can support them) so that slice
  // accuracies over the generated corpus do not drift with the seed; the
  // rest is filled greedily in marginal order.
  const std::size_t n = marginals.size();
  std::vector<ContextQuota> quota(n);
  std::vector<bool> pinned(n, false);
  std::size_t need_dp = kPeriodDiscourse, need_dc = kCommaDiscourse;
  std::size_t need_sp = kPeriodCases - kPeriodDiscourse, need_sc = kCommaCases - kCommaDiscourse;

  auto take = [](std::size_t& need, std::size_t avail) {
    std::size_t got = std::min(need, avail);
    need -= got;
    return got;
  };

  for (std::size_t i = 0; i < n; ++i) {
    const WordMarginal& m = marginals[i];
    const std::size_t s = m.total_count - m.discourse_count;
    if (m.word == "and" && m.discourse_count >= 47 && s >= 8 &&
        need_dp >= 29 && need_dc >= 18 && need_sp >= 1 && need_sc >= 7) {
      quota[i] = {29, 18, 1, 7};
      pinned[i] = true;
    } else if (m.word == "say" && m.discourse_count >= 4 && need_dp >= 4) {
      quota[i] = {4, 0, 0, 0};
      pinned[i] = true;
    } else {
      continue;
    }
    need_dp -= quota[i].d_period;
    need_dc -= quota[i].d_comma;
    need_sp -= quota[i].s_period;
    need_sc -= quota[i].s_comma;
  }

  for (std::size_t i = 0; i < n && need_dp > 0; ++i) {
    if (pinned[i]) continue;
    quota[i].d_period = take(need_dp, marginals[i].discourse_count);
  }
  for (std::size_t i = 0; i < n && need_dc > 0; ++i) {
    if (pinned[i]) continue;
    quota[i].d_comma = take(need_dc, marginals[i].discourse_count - quota[i].d_period);
  }
  for (std::size_t i = 0; i < n && need_sp > 0; ++i) {
    if (pinned[i]) continue;
    quota[i].s_period = take(need_sp, marginals[i].total_count - marginals[i].discourse_count);
  }
  for (std::size_t i = 0; i < n && need_sc > 0; ++i) {
    if (pinned[i]) continue;
    std::size_t s = marginals[i].total_count - marginals[i].discourse_count;
    quota[i].s_comma = take(need_sc, s - quota[i].s_period);
  }
  if (need_dp || need_dc || need_sp || need_sc) {
    throw SynthesisError("marginals cannot realize the -1 context partition");
  }

  // Deal the unconstrained slots from exact-count pools so the corpus-wide
  // frequency of every lexicon token is fixed; only the seed moves tokens
  // between cases.
  Rng rng(seed);

  std::vector<Token> m1_pool;  // -1 slots outside the period/comma groups
  m1_pool.reserve(kOtherCases);
  {
    std::vector<Token> choices;
    for (const Token& t : high_lexicon()) {
      if (t != kPeriod && t != kComma) choices.push_back(t);
    }
    const std::size_t base = kOtherCases / choices.size();
    const std::size_t extra = kOtherCases % choices.size();
    for (std::size_t i = 0; i < choices.size(); ++i) {
      const std::size_t count = base + (i < extra ? 1 : 0);
      m1_pool.insert(m1_pool.end(), count, choices[i]);
    }
    rng.shuffle(m1_pool);
  }

  std::vector<Token> right_pool;  // positions 1..4 of every case
  right_pool.reserve(4 * kTotalCases);
  {
    const std::size_t filler_total = filler_lexicon().size() * kFillerOccurrences;
    const std::size_t high_total = 4 * kTotalCases - filler_total;
    const std::size_t base = high_total / high_lexicon().size();
    const std::size_t extra = high_total % high_lexicon().size();
    for (std::size_t i = 0; i < high_lexicon().size(); ++i) {
      const std::size_t count = base + (i < extra ? 1 : 0);
      right_pool.insert(right_pool.end(), count, high_lexicon()[i]);
    }
    for (const Token& t : filler_lexicon()) {
      right_pool.insert(right_pool.end(), kFillerOccurrences, t);
    }
    rng.shuffle(right_pool);
  }

  Corpus corpus;
  corpus.cases.reserve(kTotalCases);
  std::size_t m1_next = 0, right_next = 0;
  auto emit = [&](const Token& word, SenseClass sense, std::size_t count, const Token* fixed_m1) {
    for (std::size_t k = 0; k < count; ++k) {
      TrainingCase c;
      c.sense = sense;
      c.at(-1) = fixed_m1 ? *fixed_m1 : m1_pool[m1_next++];
      c.at(0) = word;
      for (int p = 1; p <= 4; ++p) c.at(p) = right_pool[right_next++];
      corpus.cases.push_back(std::move(c));
    }
  };

  const Token period{kPeriod}, comma{kComma};
  for (std::size_t i = 0; i < n; ++i) {
    const WordMarginal& m = marginals[i];
    const ContextQuota& q = quota[i];
    const std::size_t s = m.total_count - m.discourse_count;
    emit(m.word, SenseClass::Discourse, q.d_period, &period);
    emit(m.word, SenseClass::Discourse, q.d_comma, &comma);
    emit(m.word, SenseClass::Discourse, m.discourse_count - q.d_period - q.d_comma, nullptr);
    emit(m.word, SenseClass::Sentential, q.s_period, &period);
    emit(m.word, SenseClass::Sentential, q.s_comma, &comma);
    emit(m.word, SenseClass::Sentential, s - q.s_period - q.s_comma, nullptr);
  }
  return corpus;
}

}  // namespace cluetree
