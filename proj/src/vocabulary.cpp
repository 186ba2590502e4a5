#include "cluetree/vocabulary.hpp"

#include <algorithm>
#include <unordered_map>

#include "cluetree/errors.hpp"

namespace cluetree {

bool Vocabulary::general_contains(const Token& t) const {
  return std::binary_search(general.begin(), general.end(), t);
}

bool Vocabulary::clue_contains(const Token& t) const {
  return std::binary_search(clue.begin(), clue.end(), t);
}

Vocabulary build_vocabulary(const Corpus& train, const VocabularyConfig& cfg) {
  if (train.empty()) throw VocabularyError("cannot build a vocabulary from an empty training corpus");

  std::unordered_map<Token, std::size_t> general_counts;
  std::unordered_map<Token, std::size_t> clue_counts;
  for (const TrainingCase& c : train) {
    for (int p : kPositions) {
      if (p == 0) {
        ++clue_counts[c.at(p)];
      } else {
        ++general_counts[c.at(p)];
      }
    }
  }

  Vocabulary vocab;
  for (const auto& [token, count] : general_counts) {
    if (count > cfg.general_threshold) vocab.general.push_back(token);
  }
  for (const auto& [token, count] : clue_counts) {
    if (count > cfg.clue_threshold) vocab.clue.push_back(token);
  }
  std::sort(vocab.general.begin(), vocab.general.end());
  std::sort(vocab.clue.begin(), vocab.clue.end());
  return vocab;
}

}  // namespace cluetree
