#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tweetiment/error.hpp"
#include "tweetiment/naive_bayes.hpp"

using namespace tweetiment;

namespace {

FeatureVector fv(FeatureMode mode, std::vector<FeatureEntry> entries) {
  return FeatureVector{mode, std::move(entries)};
}

// docs {(good good -> pos), (bad -> neg)} over vocab {good: 0, bad: 1}
std::vector<TrainingExample> two_doc_corpus() {
  return {{fv(FeatureMode::frequency, {{0, 2}}), Sentiment::positive},
          {fv(FeatureMode::frequency, {{1, 1}}), Sentiment::negative}};
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::invalid_argument;
}

}  // namespace

TEST_CASE("nb_train on the two-document example") {
  const auto model = nb_train(two_doc_corpus(), 2, 1.0);
  const auto pos = class_index(Sentiment::positive);
  const auto neg = class_index(Sentiment::negative);
  CHECK(std::exp(model.feature_log_likelihood[pos][0]) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(std::exp(model.feature_log_likelihood[neg][0]) == doctest::Approx(1.0 / 3).epsilon(1e-15));
  CHECK(std::exp(model.class_log_prior[pos]) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(std::exp(model.class_log_prior[neg]) == doctest::Approx(0.5).epsilon(1e-15));

  const auto p = nb_predict(model, fv(FeatureMode::frequency, {{0, 1}}));
  CHECK(p.label == Sentiment::positive);
  CHECK(p.log_score[pos] == doctest::Approx(std::log(0.5 * 0.75)));
  CHECK(p.log_score[neg] == doctest::Approx(std::log(0.5 / 3)));
}

TEST_CASE("nb_predict falls back to priors") {
  const auto model = nb_train(two_doc_corpus(), 2, 1.0);
  const auto empty = nb_predict(model, fv(FeatureMode::frequency, {}));
  CHECK(empty.label == Sentiment::positive);
  CHECK(empty.log_score[0] == empty.log_score[1]);
}

TEST_CASE("nb_train errors") {
  CHECK(code_of([] { nb_train({}, 2); }) == ErrorCode::no_training_data);
  const std::vector<TrainingExample> one_class = {
      {fv(FeatureMode::frequency, {{0, 1}}), Sentiment::positive}};
  CHECK(code_of([&] { nb_train(one_class, 2); }) == ErrorCode::degenerate_labels);
  CHECK(code_of([] { nb_train(two_doc_corpus(), 2, 0.0); }) == ErrorCode::invalid_argument);
  auto mixed = two_doc_corpus();
  mixed[1].features.mode = FeatureMode::presence;
  CHECK(code_of([&] { nb_train(mixed, 2); }) == ErrorCode::mode_mismatch);
  CHECK(code_of([] { nb_train(two_doc_corpus(), 1); }) == ErrorCode::invalid_argument);
  const auto model = nb_train(two_doc_corpus(), 2);
  CHECK(code_of([&] { nb_predict(model, fv(FeatureMode::presence, {})); }) ==
        ErrorCode::mode_mismatch);
}

TEST_CASE("nb model invariants on random corpora") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> count(0, 3), nvocab(1, 12), ndocs(2, 15);
  for (int trial = 0; trial < 200; ++trial) {
    const auto v = static_cast<std::uint32_t>(nvocab(rng));
    std::vector<TrainingExample> corpus;
    const int n = ndocs(rng);
    for (int d = 0; d < n; ++d) {
      FeatureVector f{FeatureMode::frequency, {}};
      for (std::uint32_t i = 0; i < v; ++i) {
        if (const int c = count(rng)) f.entries.push_back({i, static_cast<std::uint32_t>(c)});
      }
      corpus.push_back({f, d % 2 == 0 ? Sentiment::positive : Sentiment::negative});
    }
    const auto model = nb_train(corpus, v, 1.0);
    double prior_mass = 0.0;
    for (std::size_t c = 0; c < kNumClasses; ++c) {
      prior_mass += std::exp(model.class_log_prior[c]);
      double mass = 0.0;
      for (const double ll : model.feature_log_likelihood[c]) {
        CHECK(std::isfinite(ll));
        mass += std::exp(ll);
      }
      CHECK(std::abs(mass - 1.0) < 1e-9);
    }
    CHECK(std::abs(prior_mass - 1.0) < 1e-12);

    // k-fold duplication: priors are unchanged; likelihoods match training
    // once with alpha / k, since (k*n + a) / (k*t + a*V) = (n + a/k) / (t + (a/k)*V)
    for (int k : {2, 3}) {
      std::vector<TrainingExample> dup;
      for (int rep = 0; rep < k; ++rep) dup.insert(dup.end(), corpus.begin(), corpus.end());
      const auto big = nb_train(dup, v, 1.0);
      const auto scaled = nb_train(corpus, v, 1.0 / k);
      CHECK(big.class_log_prior == model.class_log_prior);
      for (std::size_t c = 0; c < kNumClasses; ++c) {
        for (std::size_t i = 0; i < v; ++i) {
          CHECK(big.feature_log_likelihood[c][i] ==
                doctest::Approx(scaled.feature_log_likelihood[c][i]).epsilon(1e-12));
        }
      }
    }
  }
}

TEST_CASE("presence-mode predictions ignore within-tweet repetition") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> word(0, 7), len(1, 6), rep(1, 4), bit(0, 1);
  auto random_tweet = [&] {
    NormalizedTweet t;
    for (int n = len(rng); n > 0; --n) t.tokens.push_back("w" + std::to_string(word(rng)));
    return t;
  };
  std::vector<NormalizedTweet> tweets;
  std::vector<TrainingExample> corpus;
  for (int k = 0; k < 30; ++k) tweets.push_back(random_tweet());
  const auto vocab = build_vocabulary(tweets, 8, 0);
  for (int k = 0; k < 30; ++k) {
    corpus.push_back({vectorize(tweets[k], vocab, FeatureMode::presence),
                      k < 2 ? (k ? Sentiment::positive : Sentiment::negative)
                            : (bit(rng) ? Sentiment::positive : Sentiment::negative)});
  }
  const auto model = nb_train(corpus, vocab.size());
  for (int trial = 0; trial < 300; ++trial) {
    const auto t = random_tweet();
    NormalizedTweet repeated;
    for (const auto& w : t.tokens) {
      for (int r = rep(rng); r > 0; --r) repeated.tokens.push_back(w);
    }
    const auto a = nb_predict(model, vectorize(t, vocab, FeatureMode::presence));
    const auto b = nb_predict(model, vectorize(repeated, vocab, FeatureMode::presence));
    CHECK(a.label == b.label);
    CHECK(a.log_score == b.log_score);
  }
}

TEST_CASE("nb_predict matches the product-formula oracle on small instances") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> count(0, 2), nvocab(1, 3), ndocs(2, 6), label(0, 1);
  int checked = 0;
  while (checked < 500) {
    oracle::NaiveBayesOracle o;
    o.vocab = nvocab(rng);
    std::vector<TrainingExample> corpus;
    const int n = ndocs(rng);
    for (int d = 0; d < n; ++d) {
      std::vector<int> x(o.vocab);
      FeatureVector f{FeatureMode::frequency, {}};
      for (int i = 0; i < o.vocab; ++i) {
        x[i] = count(rng);
        if (x[i]) f.entries.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(x[i])});
      }
      const int y = label(rng);
      o.docs.push_back(x);
      o.labels.push_back(y);
      corpus.push_back({f, y ? Sentiment::positive : Sentiment::negative});
    }
    if (std::count(o.labels.begin(), o.labels.end(), 1) % n == 0) continue;
    const auto model = nb_train(corpus, o.vocab);
    std::vector<int> x(o.vocab);
    FeatureVector doc{FeatureMode::frequency, {}};
    for (int i = 0; i < o.vocab; ++i) {
      x[i] = count(rng);
      if (x[i]) doc.entries.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(x[i])});
    }
    const auto p = nb_predict(model, doc);
    for (int c = 0; c < 2; ++c) CHECK(std::abs(p.log_score[c] - o.log_score(c, x)) < 1e-9);
    ++checked;
  }
}
