#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tweetiment/model_io.hpp"

namespace tweetiment {

struct TrainOptions {
  ModelKind kind = ModelKind::naive_bayes;
  FeatureMode mode = FeatureMode::presence;
  std::size_t unigrams = kDefaultUnigramBudget;
  std::size_t bigrams = kDefaultBigramBudget;
  double alpha = kDefaultAlpha;
  TrainerConfig trainer;
  std::optional<OpinionLexicon> lexicon;  // required for ModelKind::baseline
  std::string timestamp;
};

// Builds the vocabulary from the training tweets, vectorizes them and fits
// the requested classifier.
ModelArtifact train_model(std::span<const NormalizedTweet> tweets,
                          std::span<const Sentiment> labels, const TrainOptions& options);

Sentiment predict(const ModelArtifact& model, const NormalizedTweet& tweet);
std::vector<Sentiment> predict_all(const ModelArtifact& model,
                                   std::span<const NormalizedTweet> tweets);

}  // namespace tweetiment
