#include "tweetiment/eval.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <vector>

#include "tweetiment/error.hpp"

namespace tweetiment {
namespace {

double mean(std::uint64_t total, std::uint64_t n) {
  return n == 0 ? 0.0 : static_cast<double>(total) / static_cast<double>(n);
}

std::string fixed4(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(4) << v;
  return os.str();
}

struct StatsRow {
  std::string name;
  std::optional<std::uint64_t> total, unique;
  std::optional<double> average;
  std::optional<std::uint64_t> maximum, positive, negative;
};

std::vector<StatsRow> stats_rows(const CorpusStats& s) {
  return {
      {"Tweets", s.n_tweets, {}, {}, {}, s.n_positive, s.n_negative},
      {"User Mentions", s.user_mentions.total, {}, s.user_mentions.average,
       s.user_mentions.maximum, {}, {}},
      {"Emoticons", s.emoticons.total, {}, s.emoticons.average, s.emoticons.maximum,
       s.emoticons_positive, s.emoticons_negative},
      {"URLs", s.urls.total, {}, s.urls.average, s.urls.maximum, {}, {}},
      {"Unigrams", s.unigrams.total, s.unigrams_unique, s.unigrams.average, s.unigrams.maximum,
       {}, {}},
      {"Bigrams", s.bigrams_total, s.bigrams_unique, s.bigrams_average, {}, {}, {}},
  };
}

template <typename T>
std::string cell(const std::optional<T>& v, const char* missing) {
  if (!v) return missing;
  if constexpr (std::is_floating_point_v<T>) {
    return fixed4(*v);
  } else {
    return std::to_string(*v);
  }
}

}  // namespace

EvaluationReport evaluate(std::span<const Sentiment> predictions, std::span<const Sentiment> gold,
                          std::string model_name) {
  if (predictions.size() != gold.size()) {
    throw Error(ErrorCode::length_mismatch, std::to_string(predictions.size()) +
                                                " predictions for " + std::to_string(gold.size()) +
                                                " gold labels");
  }
  if (gold.empty()) throw Error(ErrorCode::empty_input, "nothing to evaluate");
  EvaluationReport r;
  r.model_name = std::move(model_name);
  r.n_docs = gold.size();
  for (std::size_t k = 0; k < gold.size(); ++k) {
    ++r.confusion[class_index(gold[k])][class_index(predictions[k])];
  }
  r.accuracy = static_cast<double>(r.true_positive() + r.true_negative()) /
               static_cast<double>(r.n_docs);
  return r;
}

EvaluationReport baseline_report(std::span<const NormalizedTweet> corpus,
                                 std::span<const Sentiment> gold, const OpinionLexicon& lexicon,
                                 std::span<const Sentiment> model_predictions,
                                 std::string model_name) {
  if (corpus.size() != gold.size()) {
    throw Error(ErrorCode::length_mismatch, "tweets and gold labels differ in length");
  }
  std::vector<Sentiment> baseline;
  baseline.reserve(corpus.size());
  for (const auto& t : corpus) baseline.push_back(baseline_classify(t, lexicon));
  auto report = evaluate(model_predictions, gold, std::move(model_name));
  report.baseline_accuracy = evaluate(baseline, gold).accuracy;
  return report;
}

void print_report(std::ostream& out, const EvaluationReport& r) {
  out << "model:     " << (r.model_name.empty() ? "-" : r.model_name) << '\n'
      << "documents: " << r.n_docs << '\n'
      << "accuracy:  " << fixed4(r.accuracy) << '\n';
  if (r.baseline_accuracy) {
    out << "baseline:  " << fixed4(*r.baseline_accuracy) << '\n';
  }
  out << "confusion (rows gold, columns predicted)\n"
      << "              pred 0    pred 1\n"
      << "  gold 0  " << std::setw(10) << r.confusion[0][0] << std::setw(10) << r.confusion[0][1]
      << '\n'
      << "  gold 1  " << std::setw(10) << r.confusion[1][0] << std::setw(10) << r.confusion[1][1]
      << '\n';
}

void write_report_csv(std::ostream& out, const EvaluationReport& r) {
  out << "model,n_docs,accuracy,baseline_accuracy,tn,fp,fn,tp\n";
  out << r.model_name << ',' << r.n_docs << ',' << std::setprecision(17) << r.accuracy << ',';
  if (r.baseline_accuracy) out << *r.baseline_accuracy;
  out << ',' << r.true_negative() << ',' << r.false_positive() << ',' << r.false_negative() << ','
      << r.true_positive() << '\n';
}

void CorpusStatsAccumulator::add(const NormalizedTweet& tweet, std::optional<Sentiment> label) {
  ++n_tweets_;
  if (label) {
    ++n_labeled_;
    if (*label == Sentiment::positive) ++n_positive_;
  }
  std::uint64_t mentions = 0, pos = 0, neg = 0, urls = 0;
  for (const auto& token : tweet.tokens) {
    const auto special = special_token_of(token);
    if (!special) continue;
    switch (*special) {
      case SpecialToken::user_mention: ++mentions; break;
      case SpecialToken::emo_pos: ++pos; break;
      case SpecialToken::emo_neg: ++neg; break;
      case SpecialToken::url: ++urls; break;
    }
  }
  mentions_ += mentions;
  max_mentions_ = std::max(max_mentions_, mentions);
  emo_pos_ += pos;
  emo_neg_ += neg;
  max_emoticons_ = std::max(max_emoticons_, pos + neg);
  urls_ += urls;
  max_urls_ = std::max(max_urls_, urls);
  max_unigrams_ = std::max<std::uint64_t>(max_unigrams_, tweet.tokens.size());
  ngrams_.add(tweet);
}

void CorpusStatsAccumulator::merge(const CorpusStatsAccumulator& o) {
  n_tweets_ += o.n_tweets_;
  n_labeled_ += o.n_labeled_;
  n_positive_ += o.n_positive_;
  mentions_ += o.mentions_;
  max_mentions_ = std::max(max_mentions_, o.max_mentions_);
  emo_pos_ += o.emo_pos_;
  emo_neg_ += o.emo_neg_;
  max_emoticons_ = std::max(max_emoticons_, o.max_emoticons_);
  urls_ += o.urls_;
  max_urls_ = std::max(max_urls_, o.max_urls_);
  max_unigrams_ = std::max(max_unigrams_, o.max_unigrams_);
  ngrams_.merge(o.ngrams_);
}

CorpusStats CorpusStatsAccumulator::finish() const {
  CorpusStats s;
  s.n_tweets = n_tweets_;
  if (n_labeled_ == n_tweets_) {
    s.n_positive = n_positive_;
    s.n_negative = n_tweets_ - n_positive_;
  }
  s.user_mentions = {mentions_, mean(mentions_, n_tweets_), max_mentions_};
  s.emoticons = {emo_pos_ + emo_neg_, mean(emo_pos_ + emo_neg_, n_tweets_), max_emoticons_};
  s.emoticons_positive = emo_pos_;
  s.emoticons_negative = emo_neg_;
  s.urls = {urls_, mean(urls_, n_tweets_), max_urls_};
  s.unigrams = {ngrams_.unigrams.total(), mean(ngrams_.unigrams.total(), n_tweets_),
                max_unigrams_};
  s.unigrams_unique = ngrams_.unigrams.unique();
  s.bigrams_total = ngrams_.bigrams.total();
  s.bigrams_unique = ngrams_.bigrams.unique();
  s.bigrams_average = mean(s.bigrams_total, n_tweets_);
  return s;
}

CorpusStats corpus_stats(std::span<const StatsInput> corpus) {
  CorpusStatsAccumulator acc;
  for (const auto& in : corpus) acc.add(in.tweet, in.label);
  return acc.finish();
}

void print_corpus_stats(std::ostream& out, const CorpusStats& stats) {
  const auto rows = stats_rows(stats);
  out << std::left << std::setw(15) << "" << std::right;
  for (const char* h : {"Total", "Unique", "Average", "Maximum", "Positive", "Negative"}) {
    out << std::setw(12) << h;
  }
  out << '\n';
  for (const auto& r : rows) {
    out << std::left << std::setw(15) << r.name << std::right << std::setw(12)
        << cell(r.total, "N/A") << std::setw(12) << cell(r.unique, "N/A") << std::setw(12)
        << cell(r.average, "N/A") << std::setw(12) << cell(r.maximum, "N/A") << std::setw(12)
        << cell(r.positive, "N/A") << std::setw(12) << cell(r.negative, "N/A") << '\n';
  }
}

void write_corpus_stats_csv(std::ostream& out, const CorpusStats& stats) {
  out << "row,total,unique,average,maximum,positive,negative\n";
  for (const auto& r : stats_rows(stats)) {
    out << r.name << ',' << cell(r.total, "") << ',' << cell(r.unique, "") << ','
        << cell(r.average, "") << ',' << cell(r.maximum, "") << ',' << cell(r.positive, "") << ','
        << cell(r.negative, "") << '\n';
  }
}

}  // namespace tweetiment
