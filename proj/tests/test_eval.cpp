#include <random>
#include <sstream>

#include "doctest.h"
#include "tweetiment/error.hpp"
#include "tweetiment/eval.hpp"

using namespace tweetiment;

namespace {
constexpr auto P = Sentiment::positive;
constexpr auto N = Sentiment::negative;

NormalizedTweet tw(std::vector<std::string> tokens) { return NormalizedTweet{std::move(tokens)}; }
}  // namespace

TEST_CASE("evaluate builds the confusion matrix") {
  const std::vector<Sentiment> gold = {P, P, N, N, P};
  const std::vector<Sentiment> pred = {P, N, N, P, P};
  const auto r = evaluate(pred, gold, "nb");
  CHECK(r.n_docs == 5);
  CHECK(r.true_positive() == 2);
  CHECK(r.false_negative() == 1);
  CHECK(r.true_negative() == 1);
  CHECK(r.false_positive() == 1);
  CHECK(r.accuracy == doctest::Approx(0.6));

  std::ostringstream csv;
  write_report_csv(csv, r);
  CHECK(csv.str() == "model,n_docs,accuracy,baseline_accuracy,tn,fp,fn,tp\nnb,5,0.59999999999999998,,1,1,1,2\n");
  std::ostringstream text;
  print_report(text, r);
  CHECK(text.str().find("accuracy:  0.6000") != std::string::npos);
}

TEST_CASE("evaluate errors") {
  const std::vector<Sentiment> two = {P, N}, one = {P}, none;
  CHECK_THROWS_WITH_AS(evaluate(two, one), doctest::Contains("length mismatch"), Error);
  CHECK_THROWS_WITH_AS(evaluate(none, none), doctest::Contains("empty input"), Error);
}

TEST_CASE("accuracy properties") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> bit(0, 1), len(1, 40);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Sentiment> gold(len(rng)), pred(gold.size());
    for (auto& g : gold) g = bit(rng) ? P : N;
    for (auto& p : pred) p = bit(rng) ? P : N;
    const auto r = evaluate(pred, gold);
    CHECK(r.accuracy >= 0.0);
    CHECK(r.accuracy <= 1.0);
    std::size_t cells = 0;
    for (const auto& row : r.confusion)
      for (auto c : row) cells += c;
    CHECK(cells == gold.size());
    CHECK(evaluate(gold, gold).accuracy == 1.0);
    std::vector<Sentiment> flipped = gold;
    for (auto& f : flipped) f = f == P ? N : P;
    CHECK(evaluate(flipped, gold).accuracy == 0.0);
  }
}

TEST_CASE("baseline_report adds the lexicon baseline") {
  const OpinionLexicon lex({"good"}, {"bad"});
  const std::vector<NormalizedTweet> tweets = {tw({"good"}), tw({"bad"}), tw({"bad", "day"}),
                                               tw({"meh"})};
  const std::vector<Sentiment> gold = {P, N, P, N};
  const std::vector<Sentiment> model = {P, N, P, N};
  const auto r = baseline_report(tweets, gold, lex, model, "maxent");
  CHECK(r.accuracy == 1.0);
  REQUIRE(r.baseline_accuracy);
  CHECK(*r.baseline_accuracy == doctest::Approx(0.5));
}

TEST_CASE("corpus_stats on a small corpus") {
  const std::vector<StatsInput> corpus = {
      {tw({"USER_MENTION", "good", "day", "EMO_POS", "EMO_POS"}), P},
      {tw({"bad", "day", "URL"}), N},
      {tw({"USER_MENTION", "USER_MENTION", "EMO_NEG"}), N},
      {tw({}), P},
  };
  const auto s = corpus_stats(corpus);
  CHECK(s.n_tweets == 4);
  CHECK(s.n_positive == 2u);
  CHECK(s.n_negative == 2u);
  CHECK(s.user_mentions == CountSummary{3, 0.75, 2});
  CHECK(s.emoticons == CountSummary{3, 0.75, 2});
  CHECK(s.emoticons_positive == 2);
  CHECK(s.emoticons_negative == 1);
  CHECK(s.urls == CountSummary{1, 0.25, 1});
  CHECK(s.unigrams == CountSummary{11, 2.75, 5});
  CHECK(s.unigrams_unique == 7);
  CHECK(s.bigrams_total == 8);
  CHECK(s.bigrams_unique == 8);
  CHECK(s.bigrams_average == 2.0);

  std::ostringstream csv;
  write_corpus_stats_csv(csv, s);
  CHECK(csv.str() ==
        "row,total,unique,average,maximum,positive,negative\n"
        "Tweets,4,,,,2,2\n"
        "User Mentions,3,,0.7500,2,,\n"
        "Emoticons,3,,0.7500,2,2,1\n"
        "URLs,1,,0.2500,1,,\n"
        "Unigrams,11,7,2.7500,5,,\n"
        "Bigrams,8,8,2.0000,,,\n");

  std::vector<StatsInput> partly = corpus;
  partly[3].label.reset();
  const auto u = corpus_stats(partly);
  CHECK_FALSE(u.n_positive);
  std::ostringstream text;
  print_corpus_stats(text, u);
  CHECK(text.str().find("N/A") != std::string::npos);
}

TEST_CASE("stats accumulators merge in any order") {
  std::mt19937 rng(9);
  const std::vector<std::string> pool = {"a", "b", "c", "URL", "USER_MENTION", "EMO_POS",
                                         "EMO_NEG"};
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1), len(0, 8), shard(0, 2);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<StatsInput> corpus;
    CorpusStatsAccumulator parts[3];
    for (int k = 0; k < 30; ++k) {
      NormalizedTweet t;
      for (std::size_t n = len(rng); n > 0; --n) t.tokens.push_back(pool[pick(rng)]);
      const auto label = k % 2 ? P : N;
      corpus.push_back({t, label});
      parts[shard(rng)].add(t, label);
    }
    const auto whole = corpus_stats(corpus);
    CorpusStatsAccumulator ab = parts[0], ba = parts[2];
    ab.merge(parts[1]);
    ab.merge(parts[2]);
    ba.merge(parts[1]);
    ba.merge(parts[0]);
    for (const auto& merged : {ab.finish(), ba.finish()}) {
      CHECK(merged.n_tweets == whole.n_tweets);
      CHECK(merged.n_positive == whole.n_positive);
      CHECK(merged.user_mentions == whole.user_mentions);
      CHECK(merged.emoticons == whole.emoticons);
      CHECK(merged.urls == whole.urls);
      CHECK(merged.unigrams.total == whole.unigrams.total);
      CHECK(merged.unigrams.maximum == whole.unigrams.maximum);
      CHECK(merged.unigrams_unique == whole.unigrams_unique);
      CHECK(merged.bigrams_total == whole.bigrams_total);
      CHECK(merged.bigrams_unique == whole.bigrams_unique);
    }
  }
}
