#include "tweetiment/error.hpp"

namespace tweetiment {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::malformed_row: return "malformed row";
    case ErrorCode::invalid_label: return "invalid label";
    case ErrorCode::duplicate_id: return "duplicate tweet id";
    case ErrorCode::lexicon_conflict: return "lexicon conflict";
    case ErrorCode::emoticon_conflict: return "emoticon conflict";
    case ErrorCode::io_failure: return "i/o failure";
    case ErrorCode::no_training_data: return "no training data";
    case ErrorCode::degenerate_labels: return "degenerate labels";
    case ErrorCode::no_active_features: return "no active features";
    case ErrorCode::mode_mismatch: return "feature mode mismatch";
    case ErrorCode::length_mismatch: return "length mismatch";
    case ErrorCode::empty_input: return "empty input";
    case ErrorCode::invalid_split: return "invalid split";
    case ErrorCode::invalid_argument: return "invalid argument";
    case ErrorCode::invalid_config: return "invalid config";
    case ErrorCode::unsupported_version: return "unsupported version";
    case ErrorCode::unknown_kind: return "unknown model kind";
    case ErrorCode::truncated_model: return "truncated model";
    case ErrorCode::malformed_model: return "malformed model";
  }
  return "unknown error";
}

ErrorCategory error_category(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument:
    case ErrorCode::invalid_config:
      return ErrorCategory::usage;
    case ErrorCode::unsupported_version:
    case ErrorCode::unknown_kind:
    case ErrorCode::truncated_model:
    case ErrorCode::malformed_model:
      return ErrorCategory::model_format;
    default:
      return ErrorCategory::data;
  }
}

}  // namespace tweetiment
