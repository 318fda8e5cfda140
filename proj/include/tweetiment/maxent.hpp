#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "tweetiment/features.hpp"
#include "tweetiment/sentiment.hpp"
#include "tweetiment/training.hpp"

namespace tweetiment {

/// Conditional maximum-entropy model over joint (feature, class) indicators.
///
/// Feature (i, c) fires on document d for class c' with value value_i(d) when
/// c' == c, so score(c | d) = sum_i value_i(d) * weight(i, c) and
/// P(c | d) = exp(score(c | d)) / sum_c' exp(score(c' | d)).
class MaxEntModel {
 public:
  MaxEntModel() = default;
  explicit MaxEntModel(std::size_t vocab_size);
  MaxEntModel(std::size_t vocab_size, std::vector<double> weights);

  std::size_t vocab_size() const noexcept { return vocab_size_; }
  double weight(std::size_t feature, Sentiment c) const { return weights_.at(slot(feature, c)); }
  void set_weight(std::size_t feature, Sentiment c, double w) { weights_.at(slot(feature, c)) = w; }

  // Laid out as [feature * kNumClasses + class].
  const std::vector<double>& weights() const noexcept { return weights_; }
  std::vector<double>& weights() noexcept { return weights_; }

  static constexpr std::size_t slot(std::size_t feature, Sentiment c) noexcept {
    return feature * kNumClasses + class_index(c);
  }

  bool operator==(const MaxEntModel&) const = default;

 private:
  std::size_t vocab_size_ = 0;
  std::vector<double> weights_;
};

enum class TrainingAlgorithm : std::uint8_t { gis, iis };

std::string_view to_string(TrainingAlgorithm algorithm) noexcept;
std::optional<TrainingAlgorithm> parse_training_algorithm(std::string_view name) noexcept;

struct TrainerConfig {
  TrainingAlgorithm algorithm = TrainingAlgorithm::iis;
  std::size_t max_iterations = 100;
  // Stop once the relative improvement of the training log-likelihood drops below this.
  double ll_tolerance = 1e-6;

  void validate() const;
  bool operator==(const TrainerConfig&) const = default;
};

inline constexpr double kWeightBound = 30.0;
inline constexpr std::size_t kNewtonMaxIterations = 50;
inline constexpr double kNewtonTolerance = 1e-10;

struct MaxEntFit {
  MaxEntModel model;
  // Mean training log-likelihood: entry 0 at zero weights, then one per iteration.
  std::vector<double> log_likelihood;
  std::size_t iterations = 0;
  bool converged = false;
};

MaxEntFit maxent_fit(std::span<const TrainingExample> corpus, std::size_t vocab_size,
                     const TrainerConfig& config = {});
MaxEntModel maxent_train(std::span<const TrainingExample> corpus, std::size_t vocab_size,
                         const TrainerConfig& config = {});

// Probabilities indexed by class_index().
std::array<double, kNumClasses> maxent_prob(const MaxEntModel& model, const FeatureVector& doc);
Sentiment maxent_predict(const MaxEntModel& model, const FeatureVector& doc);

// Mean log P(label | doc) over the corpus.
double maxent_log_likelihood(const MaxEntModel& model, std::span<const TrainingExample> corpus);

struct FeatureExpectations {
  std::vector<double> empirical;  // same layout as MaxEntModel::weights()
  std::vector<double> model;
};

// Per-document averages of each joint feature under the data and the model.
FeatureExpectations maxent_expectations(const MaxEntModel& model,
                                        std::span<const TrainingExample> corpus);

}  // namespace tweetiment
