#pragma once

#include <array>
#include <span>
#include <vector>

#include "tweetiment/features.hpp"
#include "tweetiment/sentiment.hpp"
#include "tweetiment/training.hpp"

namespace tweetiment {

/// Multinomial Naive Bayes with additive (Laplace) smoothing, kept in log space.
///
/// feature_log_likelihood[c][i] = log((count(c, i) + alpha) / (total(c) + alpha * vocab_size)),
/// where count(c, i) sums the feature values of class-c documents. Presence
/// vectors are binary, so presence mode trains and predicts on binarized counts.
struct NaiveBayesModel {
  std::array<double, kNumClasses> class_log_prior{};
  std::array<std::vector<double>, kNumClasses> feature_log_likelihood;
  double alpha = 1.0;
  FeatureMode mode = FeatureMode::presence;
  std::size_t vocab_size = 0;

  bool operator==(const NaiveBayesModel&) const = default;
};

struct NaiveBayesPrediction {
  Sentiment label = Sentiment::positive;
  std::array<double, kNumClasses> log_score{};
};

inline constexpr double kDefaultAlpha = 1.0;

NaiveBayesModel nb_train(std::span<const TrainingExample> corpus, std::size_t vocab_size,
                         double alpha = kDefaultAlpha);

NaiveBayesPrediction nb_predict(const NaiveBayesModel& model, const FeatureVector& doc);

}  // namespace tweetiment
