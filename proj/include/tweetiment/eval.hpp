#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>

#include "tweetiment/baseline.hpp"
#include "tweetiment/features.hpp"
#include "tweetiment/normalizer.hpp"
#include "tweetiment/sentiment.hpp"

namespace tweetiment {

struct EvaluationReport {
  std::string model_name;
  std::size_t n_docs = 0;
  // confusion[gold][predicted], indexed by class_index()
  std::array<std::array<std::size_t, kNumClasses>, kNumClasses> confusion{};
  double accuracy = 0.0;
  std::optional<double> baseline_accuracy;

  std::size_t true_positive() const noexcept { return confusion[1][1]; }
  std::size_t true_negative() const noexcept { return confusion[0][0]; }
  std::size_t false_positive() const noexcept { return confusion[0][1]; }
  std::size_t false_negative() const noexcept { return confusion[1][0]; }
};

EvaluationReport evaluate(std::span<const Sentiment> predictions, std::span<const Sentiment> gold,
                          std::string model_name = {});

// Scores `model_predictions` and fills baseline_accuracy from the lexicon
// baseline run over the same tweets.
EvaluationReport baseline_report(std::span<const NormalizedTweet> corpus,
                                 std::span<const Sentiment> gold, const OpinionLexicon& lexicon,
                                 std::span<const Sentiment> model_predictions,
                                 std::string model_name = {});

void print_report(std::ostream& out, const EvaluationReport& report);
void write_report_csv(std::ostream& out, const EvaluationReport& report);

struct CountSummary {
  std::uint64_t total = 0;
  double average = 0.0;
  std::uint64_t maximum = 0;

  bool operator==(const CountSummary&) const = default;
};

/// Corpus statistics over normalized tweets. Cells the report
/// leaves as N/A have no field here; tweet label counts are present only
/// when every tweet carries a label.
struct CorpusStats {
  std::uint64_t n_tweets = 0;
  std::optional<std::uint64_t> n_positive;
  std::optional<std::uint64_t> n_negative;

  CountSummary user_mentions;
  CountSummary emoticons;
  std::uint64_t emoticons_positive = 0;
  std::uint64_t emoticons_negative = 0;
  CountSummary urls;

  CountSummary unigrams;
  std::uint64_t unigrams_unique = 0;

  // Bigram maximum is not reported.
  std::uint64_t bigrams_total = 0;
  std::uint64_t bigrams_unique = 0;
  double bigrams_average = 0.0;
};

/// Streaming accumulator behind corpus_stats; merge() is commutative and
/// associative so shards can be combined in any order.
class CorpusStatsAccumulator {
 public:
  void add(const NormalizedTweet& tweet, std::optional<Sentiment> label);
  void merge(const CorpusStatsAccumulator& other);
  CorpusStats finish() const;

  const NgramCounts& ngrams() const noexcept { return ngrams_; }

 private:
  std::uint64_t n_tweets_ = 0;
  std::uint64_t n_labeled_ = 0;
  std::uint64_t n_positive_ = 0;
  std::uint64_t mentions_ = 0, max_mentions_ = 0;
  std::uint64_t emo_pos_ = 0, emo_neg_ = 0, max_emoticons_ = 0;
  std::uint64_t urls_ = 0, max_urls_ = 0;
  std::uint64_t max_unigrams_ = 0;
  NgramCounts ngrams_;
};

struct StatsInput {
  NormalizedTweet tweet;
  std::optional<Sentiment> label;
};

CorpusStats corpus_stats(std::span<const StatsInput> corpus);

// Averages are printed to four decimals; values are kept exact.
void print_corpus_stats(std::ostream& out, const CorpusStats& stats);
void write_corpus_stats_csv(std::ostream& out, const CorpusStats& stats);

}  // namespace tweetiment
