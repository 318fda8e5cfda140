#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tweetiment/normalizer.hpp"

namespace tweetiment {

using Bigram = std::pair<std::string, std::string>;

inline constexpr std::size_t kDefaultUnigramBudget = 15000;
inline constexpr std::size_t kDefaultBigramBudget = 10000;

std::vector<std::string> extract_unigrams(const NormalizedTweet& tweet);
std::vector<Bigram> extract_bigrams(const NormalizedTweet& tweet);

// Bigrams are keyed as "first second". Tokens never contain whitespace, and
// ' ' sorts below every character a token may hold, so key order equals pair
// order.
std::string bigram_key(std::string_view first, std::string_view second);

/// Exact occurrence counts per term; never holds zero counts.
class FrequencyDistribution {
 public:
  void add(std::string_view term, std::uint64_t count = 1);
  void merge(const FrequencyDistribution& other);

  std::uint64_t count(std::string_view term) const;
  std::uint64_t total() const noexcept { return total_; }
  std::size_t unique() const noexcept { return counts_.size(); }
  bool empty() const noexcept { return counts_.empty(); }

  const std::unordered_map<std::string, std::uint64_t>& counts() const noexcept {
    return counts_;
  }

 private:
  std::unordered_map<std::string, std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

struct NgramCounts {
  FrequencyDistribution unigrams;
  FrequencyDistribution bigrams;

  void add(const NormalizedTweet& tweet);
  void merge(const NgramCounts& other);
};

NgramCounts count_ngrams(std::span<const NormalizedTweet> corpus);

struct RankedTerm {
  std::size_t rank = 0;
  std::string term;
  std::uint64_t count = 0;

  bool operator==(const RankedTerm&) const = default;
};

// Descending count, ties broken by ascending term; ranks start at 1.
std::vector<RankedTerm> rank_frequency(const FrequencyDistribution& dist);
void write_rank_frequency_csv(std::ostream& out, std::span<const RankedTerm> ranked);

enum class TermKind : std::uint8_t { unigram, bigram };

struct Term {
  TermKind kind = TermKind::unigram;
  std::string text;  // bigrams as "first second"

  bool operator==(const Term&) const = default;
};

/// Frequency-ranked term index. Unigrams occupy [0, U), bigrams [U, U + B).
class Vocabulary {
 public:
  Vocabulary() = default;
  Vocabulary(std::size_t unigram_budget, std::size_t bigram_budget, std::vector<Term> terms);

  std::size_t unigram_budget() const noexcept { return unigram_budget_; }
  std::size_t bigram_budget() const noexcept { return bigram_budget_; }
  std::size_t unigram_count() const noexcept { return unigram_count_; }
  std::size_t bigram_count() const noexcept { return terms_.size() - unigram_count_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  const std::vector<Term>& terms() const noexcept { return terms_; }
  const Term& term(std::size_t index) const { return terms_.at(index); }

  std::optional<std::uint32_t> unigram_index(std::string_view word) const;
  std::optional<std::uint32_t> bigram_index(std::string_view first, std::string_view second) const;

  bool operator==(const Vocabulary& other) const {
    return unigram_budget_ == other.unigram_budget_ && bigram_budget_ == other.bigram_budget_ &&
           terms_ == other.terms_;
  }

 private:
  std::size_t unigram_budget_ = kDefaultUnigramBudget;
  std::size_t bigram_budget_ = kDefaultBigramBudget;
  std::size_t unigram_count_ = 0;
  std::vector<Term> terms_;
  std::unordered_map<std::string, std::uint32_t> unigram_lookup_;
  std::unordered_map<std::string, std::uint32_t> bigram_lookup_;
};

Vocabulary build_vocabulary(std::span<const NormalizedTweet> corpus,
                            std::size_t unigram_budget = kDefaultUnigramBudget,
                            std::size_t bigram_budget = kDefaultBigramBudget);
Vocabulary build_vocabulary(const NgramCounts& counts, std::size_t unigram_budget,
                            std::size_t bigram_budget);

// Text format: header "tweetiment-vocab v1 <N_uni> <N_bi>", then one
// "<index>\t<U|B>\t<term>" line per term.
void write_vocabulary(std::ostream& out, const Vocabulary& vocab);
Vocabulary read_vocabulary(std::istream& in, std::size_t expected_terms);
Vocabulary read_vocabulary(std::istream& in);

enum class FeatureMode : std::uint8_t { presence, frequency };

std::string_view to_string(FeatureMode mode) noexcept;
std::optional<FeatureMode> parse_feature_mode(std::string_view name) noexcept;

struct FeatureEntry {
  std::uint32_t index = 0;
  std::uint32_t value = 0;

  bool operator==(const FeatureEntry&) const = default;
};

/// Sparse document vector, entries sorted by index with positive values.
struct FeatureVector {
  FeatureMode mode = FeatureMode::presence;
  std::vector<FeatureEntry> entries;

  std::uint64_t value_sum() const noexcept;
  bool operator==(const FeatureVector&) const = default;
};

FeatureVector vectorize(const NormalizedTweet& tweet, const Vocabulary& vocab, FeatureMode mode);

}  // namespace tweetiment
