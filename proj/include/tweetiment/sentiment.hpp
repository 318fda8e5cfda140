#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace tweetiment {

enum class Sentiment : std::uint8_t { negative = 0, positive = 1 };

inline constexpr std::size_t kNumClasses = 2;
inline constexpr std::array<Sentiment, kNumClasses> kAllSentiments = {Sentiment::negative,
                                                                      Sentiment::positive};

constexpr std::size_t class_index(Sentiment s) noexcept { return static_cast<std::size_t>(s); }
constexpr int to_int(Sentiment s) noexcept { return static_cast<int>(s); }

constexpr std::optional<Sentiment> sentiment_from_int(long long v) noexcept {
  if (v == 0) return Sentiment::negative;
  if (v == 1) return Sentiment::positive;
  return std::nullopt;
}

// Two-class argmax; an exact tie goes to positive.
constexpr Sentiment argmax_positive_on_tie(const std::array<double, kNumClasses>& scores) noexcept {
  return scores[class_index(Sentiment::positive)] >= scores[class_index(Sentiment::negative)]
             ? Sentiment::positive
             : Sentiment::negative;
}

}  // namespace tweetiment
