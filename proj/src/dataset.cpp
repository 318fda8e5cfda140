#include "tweetiment/dataset.hpp"

#include <charconv>
#include <cmath>
#include <optional>
#include <istream>
#include <ostream>
#include <unordered_set>

namespace tweetiment {
namespace {

[[noreturn]] void row_error(ErrorCode code, std::size_t line, const std::string& what) {
  throw Error(code, "line " + std::to_string(line) + ": " + what);
}

std::optional<std::int64_t> parse_id(std::string_view field) {
  while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) field.remove_prefix(1);
  while (!field.empty() && (field.back() == ' ' || field.back() == '\t')) field.remove_suffix(1);
  std::int64_t v = 0;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, v);
  if (field.empty() || ec != std::errc() || ptr != end) return std::nullopt;
  return v;
}

Sentiment parse_label(std::string_view field, std::size_t line) {
  if (field == "0") return Sentiment::negative;
  if (field == "1") return Sentiment::positive;
  row_error(ErrorCode::invalid_label, line,
            "sentiment must be 0 or 1, got '" + std::string(field) + "'");
}

// Undoes RFC 4180 quoting of a whole field, if it is quoted.
std::string unquote(std::string_view field) {
  if (field.size() < 2 || field.front() != '"' || field.back() != '"') return std::string(field);
  std::string out;
  field = field.substr(1, field.size() - 2);
  for (std::size_t i = 0; i < field.size(); ++i) {
    out.push_back(field[i]);
    if (field[i] == '"' && i + 1 < field.size() && field[i + 1] == '"') ++i;
  }
  return out;
}

// Splits off `leading` comma-separated columns; the rest of the line is the last field.
bool split_lenient(const std::string& line, std::size_t leading, std::vector<std::string>& fields) {
  fields.clear();
  std::size_t start = 0;
  for (std::size_t k = 0; k < leading; ++k) {
    const auto comma = line.find(',', start);
    if (comma == std::string::npos) return false;
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  fields.push_back(unquote(std::string_view(line).substr(start)));
  return true;
}

// Yields (line number, fields) for each record, in either parsing mode.
template <typename Handle>
void for_each_record(std::istream& in, const CsvOptions& options, std::size_t columns,
                     Handle&& handle) {
  std::vector<std::string> fields;
  bool first = true;
  auto visit = [&](std::size_t line) {
    if (first) {
      first = false;
      if (!fields.empty() && !parse_id(fields.front())) return;  // header row
    }
    if (fields.size() != columns) {
      row_error(ErrorCode::malformed_row, line,
                "expected " + std::to_string(columns) + " fields, found " +
                    std::to_string(fields.size()));
    }
    handle(line, fields);
  };

  if (options.lenient) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      if (!split_lenient(line, columns - 1, fields)) {
        // Too few columns; keep them split so the header check sees the id.
        fields.clear();
        for (std::size_t start = 0;;) {
          const auto comma = line.find(',', start);
          fields.push_back(line.substr(start, comma - start));
          if (comma == std::string::npos) break;
          start = comma + 1;
        }
      }
      visit(line_no);
    }
    return;
  }
  CsvReader reader(in);
  while (reader.next(fields)) visit(reader.line());
}

}  // namespace

bool CsvReader::next(std::vector<std::string>& fields) {
  fields.clear();
  int ch = in_.get();
  // skip blank lines
  while (ch == '\n' || ch == '\r') {
    if (ch == '\n') ++current_line_;
    ch = in_.get();
  }
  if (ch == std::char_traits<char>::eof()) return false;
  record_line_ = current_line_;

  std::string field;
  bool quoted = false;
  bool after_quote = false;
  bool field_started = false;
  while (true) {
    if (quoted) {
      if (ch == std::char_traits<char>::eof()) {
        row_error(ErrorCode::malformed_row, record_line_, "unterminated quoted field");
      }
      if (ch == '"') {
        if (in_.peek() == '"') {
          field.push_back('"');
          in_.get();
        } else {
          quoted = false;
          after_quote = true;
        }
      } else {
        if (ch == '\n') ++current_line_;
        field.push_back(static_cast<char>(ch));
      }
    } else if (ch == ',' ) {
      fields.push_back(std::move(field));
      field.clear();
      after_quote = false;
      field_started = false;
    } else if (ch == '\n' || ch == '\r' || ch == std::char_traits<char>::eof()) {
      if (ch == '\r' && in_.peek() == '\n') in_.get();
      if (ch != std::char_traits<char>::eof()) ++current_line_;
      fields.push_back(std::move(field));
      return true;
    } else if (after_quote) {
      row_error(ErrorCode::malformed_row, record_line_, "text after closing quote");
    } else if (ch == '"' && !field_started) {
      quoted = true;
      field_started = true;
    } else if (ch == '"') {
      row_error(ErrorCode::malformed_row, record_line_, "stray quote in unquoted field");
    } else {
      field.push_back(static_cast<char>(ch));
      field_started = true;
    }
    ch = in_.get();
  }
}

std::vector<LabeledRecord> parse_labeled_csv(std::istream& in, const CsvOptions& options) {
  std::vector<LabeledRecord> records;
  std::unordered_set<std::int64_t> seen;
  for_each_record(in, options, 3, [&](std::size_t line, std::vector<std::string>& fields) {
    const auto id = parse_id(fields[0]);
    if (!id) row_error(ErrorCode::malformed_row, line, "tweet id '" + fields[0] + "' is not an integer");
    const auto label = parse_label(fields[1], line);
    if (!seen.insert(*id).second) {
      row_error(ErrorCode::duplicate_id, line, "tweet id " + std::to_string(*id) + " repeats");
    }
    records.push_back({*id, label, std::move(fields[2])});
  });
  return records;
}

std::vector<UnlabeledRecord> parse_unlabeled_csv(std::istream& in, const CsvOptions& options) {
  std::vector<UnlabeledRecord> records;
  std::unordered_set<std::int64_t> seen;
  for_each_record(in, options, 2, [&](std::size_t line, std::vector<std::string>& fields) {
    const auto id = parse_id(fields[0]);
    if (!id) row_error(ErrorCode::malformed_row, line, "tweet id '" + fields[0] + "' is not an integer");
    if (!seen.insert(*id).second) {
      row_error(ErrorCode::duplicate_id, line, "tweet id " + std::to_string(*id) + " repeats");
    }
    records.push_back({*id, std::move(fields[1])});
  });
  return records;
}

std::string csv_quote(std::string_view field) {
  std::string out = "\"";
  for (const char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void write_labeled_csv(std::ostream& out, const std::vector<LabeledRecord>& records) {
  out << "tweet_id,sentiment,tweet\n";
  for (const auto& r : records) {
    out << r.tweet_id << ',' << to_int(r.sentiment) << ',' << csv_quote(r.text) << '\n';
  }
}

void write_unlabeled_csv(std::ostream& out, const std::vector<UnlabeledRecord>& records) {
  out << "tweet_id,tweet\n";
  for (const auto& r : records) out << r.tweet_id << ',' << csv_quote(r.text) << '\n';
}

std::size_t split_point(std::size_t n, double ratio) {
  if (!(ratio > 0.0 && ratio < 1.0)) {
    throw Error(ErrorCode::invalid_split, "ratio must lie strictly between 0 and 1");
  }
  // The epsilon keeps products like 0.7 * 10 from flooring to 6.
  const auto cut = static_cast<std::size_t>(std::floor(ratio * static_cast<double>(n) + 1e-9));
  if (cut == 0 || cut >= n) {
    throw Error(ErrorCode::invalid_split, "ratio " + std::to_string(ratio) + " leaves an empty side for " +
                                              std::to_string(n) + " records");
  }
  return cut;
}

}  // namespace tweetiment
