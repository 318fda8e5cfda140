#include "tweetiment/naive_bayes.hpp"

#include <cmath>
#include <string>

#include "tweetiment/error.hpp"

namespace tweetiment {
namespace {

void check_indices(const FeatureVector& doc, std::size_t vocab_size) {
  for (const auto& e : doc.entries) {
    if (e.index >= vocab_size) {
      throw Error(ErrorCode::invalid_argument, "feature index " + std::to_string(e.index) +
                                                   " outside vocabulary of size " +
                                                   std::to_string(vocab_size));
    }
  }
}

}  // namespace

NaiveBayesModel nb_train(std::span<const TrainingExample> corpus, std::size_t vocab_size,
                         double alpha) {
  if (corpus.empty()) throw Error(ErrorCode::no_training_data, "empty training corpus");
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw Error(ErrorCode::invalid_argument, "alpha must be positive and finite");
  }

  NaiveBayesModel model;
  model.alpha = alpha;
  model.mode = corpus.front().features.mode;
  model.vocab_size = vocab_size;

  std::array<std::size_t, kNumClasses> docs{};
  std::array<std::vector<double>, kNumClasses> counts;
  for (auto& c : counts) c.assign(vocab_size, 0.0);

  for (const auto& ex : corpus) {
    if (ex.features.mode != model.mode) {
      throw Error(ErrorCode::mode_mismatch, "training vectors mix presence and frequency modes");
    }
    check_indices(ex.features, vocab_size);
    const auto c = class_index(ex.label);
    ++docs[c];
    for (const auto& e : ex.features.entries) counts[c][e.index] += e.value;
  }
  for (const auto s : kAllSentiments) {
    if (docs[class_index(s)] == 0) {
      throw Error(ErrorCode::degenerate_labels,
                  std::string("no ") + (s == Sentiment::positive ? "positive" : "negative") +
                      " documents in training corpus");
    }
  }

  const auto n = static_cast<double>(corpus.size());
  for (std::size_t c = 0; c < kNumClasses; ++c) {
    model.class_log_prior[c] = std::log(static_cast<double>(docs[c]) / n);
    double total = 0.0;
    for (const double v : counts[c]) total += v;
    const double denom = total + alpha * static_cast<double>(vocab_size);
    auto& ll = model.feature_log_likelihood[c];
    ll.resize(vocab_size);
    for (std::size_t i = 0; i < vocab_size; ++i) ll[i] = std::log((counts[c][i] + alpha) / denom);
  }
  return model;
}

NaiveBayesPrediction nb_predict(const NaiveBayesModel& model, const FeatureVector& doc) {
  if (doc.mode != model.mode) {
    throw Error(ErrorCode::mode_mismatch, std::string("model expects ") +
                                              std::string(to_string(model.mode)) + " features");
  }
  check_indices(doc, model.vocab_size);
  NaiveBayesPrediction out;
  for (std::size_t c = 0; c < kNumClasses; ++c) {
    double score = model.class_log_prior[c];
    for (const auto& e : doc.entries) {
      score += static_cast<double>(e.value) * model.feature_log_likelihood[c][e.index];
    }
    out.log_score[c] = score;
  }
  out.label = argmax_positive_on_tie(out.log_score);
  return out;
}

}  // namespace tweetiment
