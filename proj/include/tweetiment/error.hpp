#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tweetiment {

enum class ErrorCode {
  // data errors
  malformed_row,
  invalid_label,
  duplicate_id,
  lexicon_conflict,
  emoticon_conflict,
  io_failure,
  no_training_data,
  degenerate_labels,
  no_active_features,
  mode_mismatch,
  length_mismatch,
  empty_input,
  invalid_split,
  // usage errors
  invalid_argument,
  invalid_config,
  // model-format errors
  unsupported_version,
  unknown_kind,
  truncated_model,
  malformed_model,
};

enum class ErrorCategory { usage, data, model_format };

std::string_view error_code_name(ErrorCode code) noexcept;
ErrorCategory error_category(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  ErrorCategory category() const noexcept { return error_category(code_); }

 private:
  ErrorCode code_;
};

}  // namespace tweetiment
