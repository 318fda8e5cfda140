#include "tweetiment/baseline.hpp"

#include <algorithm>
#include <fstream>
#include <istream>

#include "tweetiment/error.hpp"

namespace tweetiment {
namespace {

std::unordered_set<std::string> normalized_set(const std::vector<std::string>& words) {
  std::unordered_set<std::string> out;
  for (const auto& w : words) {
    if (auto n = normalize_word(to_lower(w))) out.insert(std::move(*n));
  }
  return out;
}

std::vector<std::string> sorted(const std::unordered_set<std::string>& set) {
  std::vector<std::string> out(set.begin(), set.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

OpinionLexicon::OpinionLexicon(const std::vector<std::string>& positive,
                               const std::vector<std::string>& negative)
    : positive_(normalized_set(positive)), negative_(normalized_set(negative)) {
  std::vector<std::string> conflicts;
  for (const auto& w : positive_) {
    if (negative_.contains(w)) conflicts.push_back(w);
  }
  if (!conflicts.empty()) {
    std::sort(conflicts.begin(), conflicts.end());
    std::string list;
    for (const auto& w : conflicts) list += (list.empty() ? "" : ", ") + w;
    throw Error(ErrorCode::lexicon_conflict, "words listed as both positive and negative: " + list);
  }
}

std::vector<std::string> OpinionLexicon::read_words(std::istream& in) {
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == ';') continue;
    const auto e = line.find_last_not_of(" \t\r");
    words.push_back(line.substr(b, e - b + 1));
  }
  return words;
}

OpinionLexicon OpinionLexicon::from_files(const std::filesystem::path& positive_file,
                                          const std::filesystem::path& negative_file) {
  auto read = [](const std::filesystem::path& p) {
    std::ifstream in(p);
    if (!in) throw Error(ErrorCode::io_failure, "cannot open " + p.string());
    return read_words(in);
  };
  return OpinionLexicon(read(positive_file), read(negative_file));
}

bool OpinionLexicon::is_positive(std::string_view word) const {
  return positive_.contains(std::string(word));
}

bool OpinionLexicon::is_negative(std::string_view word) const {
  return negative_.contains(std::string(word));
}

std::vector<std::string> OpinionLexicon::positive_words() const { return sorted(positive_); }
std::vector<std::string> OpinionLexicon::negative_words() const { return sorted(negative_); }

LexiconHits count_lexicon_hits(const NormalizedTweet& tweet, const OpinionLexicon& lexicon) {
  LexiconHits hits;
  for (const auto& token : tweet.tokens) {
    if (lexicon.is_positive(token)) {
      ++hits.positive;
    } else if (lexicon.is_negative(token)) {
      ++hits.negative;
    }
  }
  return hits;
}

Sentiment baseline_classify(const NormalizedTweet& tweet, const OpinionLexicon& lexicon) {
  const auto hits = count_lexicon_hits(tweet, lexicon);
  return hits.positive >= hits.negative ? Sentiment::positive : Sentiment::negative;
}

}  // namespace tweetiment
