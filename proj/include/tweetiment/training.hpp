#pragma once

#include "tweetiment/features.hpp"
#include "tweetiment/sentiment.hpp"

namespace tweetiment {

struct TrainingExample {
  FeatureVector features;
  Sentiment label = Sentiment::positive;
};

}  // namespace tweetiment
