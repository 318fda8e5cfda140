#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

#include "tweetiment/baseline.hpp"
#include "tweetiment/features.hpp"
#include "tweetiment/maxent.hpp"
#include "tweetiment/naive_bayes.hpp"

namespace tweetiment {

enum class ModelKind : std::uint8_t { naive_bayes, maxent, baseline };

std::string_view to_string(ModelKind kind) noexcept;
std::optional<ModelKind> parse_model_kind(std::string_view name) noexcept;

inline constexpr int kModelFormatVersion = 1;

struct TrainingMetadata {
  std::size_t n_docs = 0;
  FeatureMode mode = FeatureMode::presence;
  std::optional<TrainerConfig> trainer;  // maxent only
  std::string timestamp;                 // free text, no whitespace

  bool operator==(const TrainingMetadata&) const = default;
};

using ModelParameters = std::variant<NaiveBayesModel, MaxEntModel, OpinionLexicon>;

/// A trained classifier together with the vocabulary it was trained against.
struct ModelArtifact {
  int format_version = kModelFormatVersion;
  Vocabulary vocabulary;
  ModelParameters parameters;
  TrainingMetadata metadata;

  ModelKind kind() const noexcept { return static_cast<ModelKind>(parameters.index()); }
  bool operator==(const ModelArtifact&) const = default;
};

// Text format: "tweetiment-model v1 <kind>", metadata lines, the embedded
// vocabulary block, then "parameters" ... "end". Doubles are written in
// shortest round-trip form, so deserialize(serialize(m)) == m exactly.
void serialize_model(std::ostream& out, const ModelArtifact& model);
ModelArtifact deserialize_model(std::istream& in);

std::string serialize_model(const ModelArtifact& model);
ModelArtifact deserialize_model(const std::string& text);

void save_model(const std::filesystem::path& path, const ModelArtifact& model);
ModelArtifact load_model(const std::filesystem::path& path);

}  // namespace tweetiment
