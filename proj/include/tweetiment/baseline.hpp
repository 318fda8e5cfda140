#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "tweetiment/normalizer.hpp"
#include "tweetiment/sentiment.hpp"

namespace tweetiment {

/// Positive and negative opinion words.
///
/// Entries are passed through normalize_word so they live in the same token
/// space as normalized tweets; entries that do not survive are dropped. A
/// word present in both lists (after normalization) is rejected with
/// Error(lexicon_conflict).
class OpinionLexicon {
 public:
  OpinionLexicon() = default;
  OpinionLexicon(const std::vector<std::string>& positive, const std::vector<std::string>& negative);

  // One word per line; lines starting with ';' are comments.
  static std::vector<std::string> read_words(std::istream& in);
  static OpinionLexicon from_files(const std::filesystem::path& positive_file,
                                   const std::filesystem::path& negative_file);

  bool is_positive(std::string_view word) const;
  bool is_negative(std::string_view word) const;

  // Sorted word lists, for serialization.
  std::vector<std::string> positive_words() const;
  std::vector<std::string> negative_words() const;

  std::size_t size() const noexcept { return positive_.size() + negative_.size(); }

  bool operator==(const OpinionLexicon&) const = default;

 private:
  std::unordered_set<std::string> positive_;
  std::unordered_set<std::string> negative_;
};

struct LexiconHits {
  std::size_t positive = 0;
  std::size_t negative = 0;
};

LexiconHits count_lexicon_hits(const NormalizedTweet& tweet, const OpinionLexicon& lexicon);

// Positive when positive hits >= negative hits.
Sentiment baseline_classify(const NormalizedTweet& tweet, const OpinionLexicon& lexicon);

}  // namespace tweetiment
