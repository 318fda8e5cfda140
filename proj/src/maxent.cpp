#include "tweetiment/maxent.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "tweetiment/error.hpp"

namespace tweetiment {
namespace {

using ClassScores = std::array<double, kNumClasses>;

ClassScores class_scores(const std::vector<double>& weights, const FeatureVector& doc) {
  ClassScores s{};
  for (const auto& e : doc.entries) {
    const double v = static_cast<double>(e.value);
    for (std::size_t c = 0; c < kNumClasses; ++c) {
      s[c] += v * weights[e.index * kNumClasses + c];
    }
  }
  return s;
}

ClassScores softmax(const ClassScores& scores) {
  const double top = *std::max_element(scores.begin(), scores.end());
  ClassScores p{};
  double z = 0.0;
  for (std::size_t c = 0; c < kNumClasses; ++c) {
    p[c] = std::exp(scores[c] - top);
    z += p[c];
  }
  for (auto& x : p) x /= z;
  return p;
}

// log P(c | d) without forming the probability first.
double log_prob(const ClassScores& scores, std::size_t c) {
  const double top = *std::max_element(scores.begin(), scores.end());
  double z = 0.0;
  for (const double s : scores) z += std::exp(s - top);
  return scores[c] - top - std::log(z);
}

void check_vocab(const FeatureVector& doc, std::size_t vocab_size) {
  for (const auto& e : doc.entries) {
    if (e.index >= vocab_size) {
      throw Error(ErrorCode::invalid_argument, "feature index " + std::to_string(e.index) +
                                                   " outside vocabulary of size " +
                                                   std::to_string(vocab_size));
    }
  }
}

void validate_corpus(std::span<const TrainingExample> corpus, std::size_t vocab_size) {
  if (corpus.empty()) throw Error(ErrorCode::no_training_data, "empty training corpus");
  std::array<std::size_t, kNumClasses> docs{};
  bool any_active = false;
  const auto mode = corpus.front().features.mode;
  for (const auto& ex : corpus) {
    if (ex.features.mode != mode) {
      throw Error(ErrorCode::mode_mismatch, "training vectors mix presence and frequency modes");
    }
    check_vocab(ex.features, vocab_size);
    ++docs[class_index(ex.label)];
    any_active = any_active || !ex.features.entries.empty();
  }
  if (docs[0] == 0 || docs[1] == 0) {
    throw Error(ErrorCode::degenerate_labels, "training corpus needs both classes");
  }
  if (!any_active) throw Error(ErrorCode::no_active_features, "every training vector is empty");
}

struct Pass {
  double log_likelihood = 0.0;          // mean over documents
  std::vector<ClassScores> probs;       // per document
  std::vector<double> model_expectation;  // summed over documents, weight layout
};

Pass evaluate(const std::vector<double>& weights, std::span<const TrainingExample> corpus) {
  Pass pass;
  pass.probs.reserve(corpus.size());
  pass.model_expectation.assign(weights.size(), 0.0);
  double ll = 0.0;
  for (const auto& ex : corpus) {
    const auto scores = class_scores(weights, ex.features);
    ll += log_prob(scores, class_index(ex.label));
    const auto p = softmax(scores);
    for (const auto& e : ex.features.entries) {
      for (std::size_t c = 0; c < kNumClasses; ++c) {
        pass.model_expectation[e.index * kNumClasses + c] += e.value * p[c];
      }
    }
    pass.probs.push_back(p);
  }
  pass.log_likelihood = ll / static_cast<double>(corpus.size());
  return pass;
}

std::vector<double> empirical_counts(std::span<const TrainingExample> corpus,
                                     std::size_t n_weights) {
  std::vector<double> emp(n_weights, 0.0);
  for (const auto& ex : corpus) {
    for (const auto& e : ex.features.entries) {
      emp[e.index * kNumClasses + class_index(ex.label)] += e.value;
    }
  }
  return emp;
}

double clamp_weight(double w) { return std::clamp(w, -kWeightBound, kWeightBound); }

void gis_step(std::vector<double>& weights, const std::vector<double>& empirical,
              const Pass& pass, double slack_constant) {
  for (std::size_t j = 0; j < weights.size(); ++j) {
    if (empirical[j] <= 0.0 || pass.model_expectation[j] <= 0.0) continue;
    const double delta = std::log(empirical[j] / pass.model_expectation[j]) / slack_constant;
    weights[j] = clamp_weight(weights[j] + delta);
  }
}

// Column view of the corpus: for each vocabulary index, the documents it
// occurs in, ordered by the document's total feature mass.
struct FeatureColumns {
  struct Cell {
    std::uint32_t doc;
    double value;
    double mass;
  };
  std::vector<std::vector<Cell>> columns;
};

FeatureColumns build_columns(std::span<const TrainingExample> corpus, std::size_t vocab_size) {
  std::vector<std::uint32_t> order(corpus.size());
  std::iota(order.begin(), order.end(), 0u);
  std::vector<std::uint64_t> mass(corpus.size());
  for (std::size_t d = 0; d < corpus.size(); ++d) mass[d] = corpus[d].features.value_sum();
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return mass[a] < mass[b]; });
  FeatureColumns cols;
  cols.columns.resize(vocab_size);
  for (const auto d : order) {
    for (const auto& e : corpus[d].features.entries) {
      cols.columns[e.index].push_back(
          {d, static_cast<double>(e.value), static_cast<double>(mass[d])});
    }
  }
  return cols;
}

// Solves log(sum_s a_s exp(delta * s)) = log(target) for delta with Newton's
// method. The left side is convex and increasing in delta with slope in
// [min s, max s], so iterates settle on the right of the root monotonically.
double solve_iis_delta(const std::vector<std::pair<double, double>>& mass_and_log_a,
                       double log_target, double lo, double hi) {
  double delta = 0.0;
  for (std::size_t k = 0; k < kNewtonMaxIterations; ++k) {
    double top = -INFINITY;
    for (const auto& [s, log_a] : mass_and_log_a) top = std::max(top, log_a + delta * s);
    double z = 0.0;
    double dz = 0.0;
    for (const auto& [s, log_a] : mass_and_log_a) {
      const double t = std::exp(log_a + delta * s - top);
      z += t;
      dz += s * t;
    }
    const double h = top + std::log(z) - log_target;
    const double slope = dz / z;
    const double step = h / slope;
    const double next = std::clamp(delta - step, lo, hi);
    const double moved = next - delta;
    delta = next;
    if (std::abs(moved) < kNewtonTolerance) break;
  }
  return delta;
}

void iis_step(std::vector<double>& weights, const std::vector<double>& empirical,
              const Pass& pass, const FeatureColumns& cols) {
  std::vector<std::pair<double, double>> buckets;
  for (std::size_t i = 0; i < cols.columns.size(); ++i) {
    const auto& column = cols.columns[i];
    if (column.empty()) continue;
    for (std::size_t c = 0; c < kNumClasses; ++c) {
      const std::size_t j = i * kNumClasses + c;
      if (empirical[j] <= 0.0) continue;
      buckets.clear();
      double run_mass = -1.0;
      double run_sum = 0.0;
      auto flush = [&] {
        if (run_sum > 0.0) buckets.emplace_back(run_mass, std::log(run_sum));
      };
      for (const auto& cell : column) {
        if (cell.mass != run_mass) {
          flush();
          run_mass = cell.mass;
          run_sum = 0.0;
        }
        run_sum += cell.value * pass.probs[cell.doc][c];
      }
      flush();
      if (buckets.empty()) continue;
      const double lo = -kWeightBound - weights[j];
      const double hi = kWeightBound - weights[j];
      const double delta = solve_iis_delta(buckets, std::log(empirical[j]), lo, hi);
      weights[j] = clamp_weight(weights[j] + delta);
    }
  }
}

}  // namespace

MaxEntModel::MaxEntModel(std::size_t vocab_size)
    : vocab_size_(vocab_size), weights_(vocab_size * kNumClasses, 0.0) {}

MaxEntModel::MaxEntModel(std::size_t vocab_size, std::vector<double> weights)
    : vocab_size_(vocab_size), weights_(std::move(weights)) {
  if (weights_.size() != vocab_size_ * kNumClasses) {
    throw Error(ErrorCode::invalid_argument, "weight vector does not match vocabulary size");
  }
  for (const double w : weights_) {
    if (!std::isfinite(w)) throw Error(ErrorCode::invalid_argument, "non-finite weight");
  }
}

std::string_view to_string(TrainingAlgorithm algorithm) noexcept {
  return algorithm == TrainingAlgorithm::gis ? "gis" : "iis";
}

std::optional<TrainingAlgorithm> parse_training_algorithm(std::string_view name) noexcept {
  if (name == "gis") return TrainingAlgorithm::gis;
  if (name == "iis") return TrainingAlgorithm::iis;
  return std::nullopt;
}

void TrainerConfig::validate() const {
  if (max_iterations < 1) {
    throw Error(ErrorCode::invalid_argument, "max_iterations must be at least 1");
  }
  if (!(ll_tolerance > 0.0)) throw Error(ErrorCode::invalid_argument, "ll_tolerance must be > 0");
}

MaxEntFit maxent_fit(std::span<const TrainingExample> corpus, std::size_t vocab_size,
                     const TrainerConfig& config) {
  config.validate();
  validate_corpus(corpus, vocab_size);

  MaxEntFit fit;
  fit.model = MaxEntModel(vocab_size);
  auto& weights = fit.model.weights();
  const auto empirical = empirical_counts(corpus, weights.size());

  std::uint64_t slack = 0;
  for (const auto& ex : corpus) slack = std::max(slack, ex.features.value_sum());
  FeatureColumns columns;
  if (config.algorithm == TrainingAlgorithm::iis) columns = build_columns(corpus, vocab_size);

  Pass pass = evaluate(weights, corpus);
  fit.log_likelihood.push_back(pass.log_likelihood);
  for (std::size_t it = 0; it < config.max_iterations; ++it) {
    if (config.algorithm == TrainingAlgorithm::gis) {
      gis_step(weights, empirical, pass, static_cast<double>(slack));
    } else {
      iis_step(weights, empirical, pass, columns);
    }
    const double previous = pass.log_likelihood;
    pass = evaluate(weights, corpus);
    fit.log_likelihood.push_back(pass.log_likelihood);
    fit.iterations = it + 1;
    if (previous == 0.0 ||
        (pass.log_likelihood - previous) / std::abs(previous) < config.ll_tolerance) {
      fit.converged = true;
      break;
    }
  }
  return fit;
}

MaxEntModel maxent_train(std::span<const TrainingExample> corpus, std::size_t vocab_size,
                         const TrainerConfig& config) {
  return maxent_fit(corpus, vocab_size, config).model;
}

std::array<double, kNumClasses> maxent_prob(const MaxEntModel& model, const FeatureVector& doc) {
  check_vocab(doc, model.vocab_size());
  return softmax(class_scores(model.weights(), doc));
}

Sentiment maxent_predict(const MaxEntModel& model, const FeatureVector& doc) {
  return argmax_positive_on_tie(maxent_prob(model, doc));
}

double maxent_log_likelihood(const MaxEntModel& model, std::span<const TrainingExample> corpus) {
  if (corpus.empty()) return 0.0;
  double ll = 0.0;
  for (const auto& ex : corpus) {
    check_vocab(ex.features, model.vocab_size());
    ll += log_prob(class_scores(model.weights(), ex.features), class_index(ex.label));
  }
  return ll / static_cast<double>(corpus.size());
}

FeatureExpectations maxent_expectations(const MaxEntModel& model,
                                        std::span<const TrainingExample> corpus) {
  FeatureExpectations out;
  for (const auto& ex : corpus) check_vocab(ex.features, model.vocab_size());
  out.empirical = empirical_counts(corpus, model.weights().size());
  out.model = evaluate(model.weights(), corpus).model_expectation;
  const double n = corpus.empty() ? 1.0 : static_cast<double>(corpus.size());
  for (auto& x : out.empirical) x /= n;
  for (auto& x : out.model) x /= n;
  return out;
}

}  // namespace tweetiment
