#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tweetiment/error.hpp"
#include "tweetiment/sentiment.hpp"

namespace tweetiment {

struct LabeledRecord {
  std::int64_t tweet_id = 0;
  Sentiment sentiment = Sentiment::positive;
  std::string text;

  bool operator==(const LabeledRecord&) const = default;
};

struct UnlabeledRecord {
  std::int64_t tweet_id = 0;
  std::string text;

  bool operator==(const UnlabeledRecord&) const = default;
};

struct CsvOptions {
  // Line-oriented parsing: the tweet is the remainder of the line after the
  // leading columns, so unquoted commas survive. Records cannot span lines.
  bool lenient = false;
};

/// RFC 4180 record reader. Quoted fields may hold commas, doubled quotes and
/// line breaks. Blank lines are skipped.
class CsvReader {
 public:
  explicit CsvReader(std::istream& in) : in_(in) {}

  // False at end of input. `line()` is the 1-based line the record starts on.
  bool next(std::vector<std::string>& fields);
  std::size_t line() const noexcept { return record_line_; }

 private:
  std::istream& in_;
  std::size_t current_line_ = 1;
  std::size_t record_line_ = 0;
};

// Both parsers skip a leading header row (a first record whose id column is
// not an integer) and reject duplicate tweet ids.
std::vector<LabeledRecord> parse_labeled_csv(std::istream& in, const CsvOptions& options = {});
std::vector<UnlabeledRecord> parse_unlabeled_csv(std::istream& in, const CsvOptions& options = {});

std::string csv_quote(std::string_view field);
void write_labeled_csv(std::ostream& out, const std::vector<LabeledRecord>& records);
void write_unlabeled_csv(std::ostream& out, const std::vector<UnlabeledRecord>& records);

/// Fisher-Yates shuffle driven by a 64-bit Mersenne Twister with unbiased
/// bounded draws, so a seed yields the same permutation on every platform.
template <typename T>
void deterministic_shuffle(std::vector<T>& items, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::uint64_t bound = i;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t draw = rng();
    while (draw >= limit) draw = rng();
    std::swap(items[i - 1], items[static_cast<std::size_t>(draw % bound)]);
  }
}

inline constexpr double kDefaultSplitRatio = 0.8;
inline constexpr std::uint64_t kDefaultSeed = 1;

// Training side gets floor(ratio * n) records after a seeded shuffle.
std::size_t split_point(std::size_t n, double ratio);

template <typename Record>
std::pair<std::vector<Record>, std::vector<Record>> split_dataset(std::vector<Record> records,
                                                                  double ratio,
                                                                  std::uint64_t seed) {
  const std::size_t cut = split_point(records.size(), ratio);
  deterministic_shuffle(records, seed);
  std::vector<Record> test(std::make_move_iterator(records.begin() + static_cast<std::ptrdiff_t>(cut)),
                           std::make_move_iterator(records.end()));
  records.resize(cut);
  return {std::move(records), std::move(test)};
}

}  // namespace tweetiment
