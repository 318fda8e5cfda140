#include "tweetiment/features.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "tweetiment/error.hpp"

namespace tweetiment {
namespace {

constexpr std::string_view kVocabMagic = "tweetiment-vocab";

std::vector<std::pair<std::string, std::uint64_t>> top_terms(const FrequencyDistribution& dist,
                                                             std::size_t budget) {
  std::vector<std::pair<std::string, std::uint64_t>> items(dist.counts().begin(),
                                                           dist.counts().end());
  auto by_rank = [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  };
  if (budget < items.size()) {
    std::partial_sort(items.begin(), items.begin() + static_cast<std::ptrdiff_t>(budget),
                      items.end(), by_rank);
    items.resize(budget);
  } else {
    std::sort(items.begin(), items.end(), by_rank);
  }
  return items;
}

[[noreturn]] void vocab_error(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace

std::vector<std::string> extract_unigrams(const NormalizedTweet& tweet) { return tweet.tokens; }

std::vector<Bigram> extract_bigrams(const NormalizedTweet& tweet) {
  std::vector<Bigram> out;
  for (std::size_t i = 1; i < tweet.tokens.size(); ++i) {
    out.emplace_back(tweet.tokens[i - 1], tweet.tokens[i]);
  }
  return out;
}

std::string bigram_key(std::string_view first, std::string_view second) {
  std::string key;
  key.reserve(first.size() + second.size() + 1);
  key.append(first);
  key.push_back(' ');
  key.append(second);
  return key;
}

void FrequencyDistribution::add(std::string_view term, std::uint64_t count) {
  if (count == 0) return;
  auto it = counts_.find(std::string(term));
  if (it == counts_.end()) {
    counts_.emplace(std::string(term), count);
  } else {
    it->second += count;
  }
  total_ += count;
}

void FrequencyDistribution::merge(const FrequencyDistribution& other) {
  for (const auto& [term, count] : other.counts_) add(term, count);
}

std::uint64_t FrequencyDistribution::count(std::string_view term) const {
  const auto it = counts_.find(std::string(term));
  return it == counts_.end() ? 0 : it->second;
}

void NgramCounts::add(const NormalizedTweet& tweet) {
  const auto& tokens = tweet.tokens;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    unigrams.add(tokens[i]);
    if (i > 0) bigrams.add(bigram_key(tokens[i - 1], tokens[i]));
  }
}

void NgramCounts::merge(const NgramCounts& other) {
  unigrams.merge(other.unigrams);
  bigrams.merge(other.bigrams);
}

NgramCounts count_ngrams(std::span<const NormalizedTweet> corpus) {
  NgramCounts counts;
  for (const auto& tweet : corpus) counts.add(tweet);
  return counts;
}

std::vector<RankedTerm> rank_frequency(const FrequencyDistribution& dist) {
  auto items = top_terms(dist, dist.unique());
  std::vector<RankedTerm> ranked;
  ranked.reserve(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    ranked.push_back({i + 1, std::move(items[i].first), items[i].second});
  }
  return ranked;
}

void write_rank_frequency_csv(std::ostream& out, std::span<const RankedTerm> ranked) {
  out << "rank,term,count\n";
  for (const auto& r : ranked) out << r.rank << ',' << r.term << ',' << r.count << '\n';
}

Vocabulary::Vocabulary(std::size_t unigram_budget, std::size_t bigram_budget,
                       std::vector<Term> terms)
    : unigram_budget_(unigram_budget), bigram_budget_(bigram_budget), terms_(std::move(terms)) {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    const auto index = static_cast<std::uint32_t>(i);
    if (t.kind == TermKind::unigram) {
      if (i != unigram_count_) {
        vocab_error(ErrorCode::malformed_model, "unigram after bigram at index " +
                                                    std::to_string(i));
      }
      ++unigram_count_;
      if (!unigram_lookup_.emplace(t.text, index).second) {
        vocab_error(ErrorCode::malformed_model, "duplicate unigram '" + t.text + "'");
      }
    } else {
      if (t.text.find(' ') == std::string::npos) {
        vocab_error(ErrorCode::malformed_model, "bigram '" + t.text + "' lacks a separator");
      }
      if (!bigram_lookup_.emplace(t.text, index).second) {
        vocab_error(ErrorCode::malformed_model, "duplicate bigram '" + t.text + "'");
      }
    }
  }
  if (unigram_count_ > unigram_budget_ || bigram_count() > bigram_budget_) {
    vocab_error(ErrorCode::malformed_model, "vocabulary exceeds its budget");
  }
}

std::optional<std::uint32_t> Vocabulary::unigram_index(std::string_view word) const {
  const auto it = unigram_lookup_.find(std::string(word));
  if (it == unigram_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::uint32_t> Vocabulary::bigram_index(std::string_view first,
                                                      std::string_view second) const {
  const auto it = bigram_lookup_.find(bigram_key(first, second));
  if (it == bigram_lookup_.end()) return std::nullopt;
  return it->second;
}

Vocabulary build_vocabulary(const NgramCounts& counts, std::size_t unigram_budget,
                            std::size_t bigram_budget) {
  if (unigram_budget < 1) {
    throw Error(ErrorCode::invalid_argument, "unigram budget must be at least 1");
  }
  std::vector<Term> terms;
  for (auto& [text, count] : top_terms(counts.unigrams, unigram_budget)) {
    terms.push_back({TermKind::unigram, std::move(text)});
  }
  for (auto& [text, count] : top_terms(counts.bigrams, bigram_budget)) {
    terms.push_back({TermKind::bigram, std::move(text)});
  }
  return Vocabulary(unigram_budget, bigram_budget, std::move(terms));
}

Vocabulary build_vocabulary(std::span<const NormalizedTweet> corpus, std::size_t unigram_budget,
                            std::size_t bigram_budget) {
  return build_vocabulary(count_ngrams(corpus), unigram_budget, bigram_budget);
}

void write_vocabulary(std::ostream& out, const Vocabulary& vocab) {
  out << kVocabMagic << " v1 " << vocab.unigram_budget() << ' ' << vocab.bigram_budget() << '\n';
  const auto& terms = vocab.terms();
  for (std::size_t i = 0; i < terms.size(); ++i) {
    out << i << '\t' << (terms[i].kind == TermKind::unigram ? 'U' : 'B') << '\t' << terms[i].text
        << '\n';
  }
}

namespace {

Vocabulary read_vocabulary_impl(std::istream& in, std::optional<std::size_t> expected_terms) {
  std::string line;
  if (!std::getline(in, line)) vocab_error(ErrorCode::truncated_model, "missing vocabulary header");
  std::istringstream header(line);
  std::string magic, version;
  std::size_t n_uni = 0, n_bi = 0;
  if (!(header >> magic >> version) || magic != kVocabMagic) {
    vocab_error(ErrorCode::malformed_model, "bad vocabulary header '" + line + "'");
  }
  if (version != "v1") vocab_error(ErrorCode::unsupported_version, "vocabulary " + version);
  if (!(header >> n_uni >> n_bi)) {
    vocab_error(ErrorCode::malformed_model, "bad vocabulary budgets '" + line + "'");
  }

  std::vector<Term> terms;
  while (!expected_terms || terms.size() < *expected_terms) {
    if (!std::getline(in, line)) {
      if (expected_terms) vocab_error(ErrorCode::truncated_model, "vocabulary ends early");
      break;
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() && !expected_terms) continue;
    const auto tab1 = line.find('\t');
    const auto tab2 = tab1 == std::string::npos ? tab1 : line.find('\t', tab1 + 1);
    if (tab2 == std::string::npos || tab2 != tab1 + 2) {
      vocab_error(ErrorCode::malformed_model, "bad vocabulary line '" + line + "'");
    }
    if (line.substr(0, tab1) != std::to_string(terms.size())) {
      vocab_error(ErrorCode::malformed_model, "vocabulary index out of sequence: '" + line + "'");
    }
    const char kind = line[tab1 + 1];
    if (kind != 'U' && kind != 'B') {
      vocab_error(ErrorCode::malformed_model, "bad term kind in '" + line + "'");
    }
    terms.push_back({kind == 'U' ? TermKind::unigram : TermKind::bigram, line.substr(tab2 + 1)});
  }
  return Vocabulary(n_uni, n_bi, std::move(terms));
}

}  // namespace

Vocabulary read_vocabulary(std::istream& in, std::size_t expected_terms) {
  return read_vocabulary_impl(in, expected_terms);
}

Vocabulary read_vocabulary(std::istream& in) { return read_vocabulary_impl(in, std::nullopt); }

std::string_view to_string(FeatureMode mode) noexcept {
  return mode == FeatureMode::presence ? "presence" : "frequency";
}

std::optional<FeatureMode> parse_feature_mode(std::string_view name) noexcept {
  if (name == "presence") return FeatureMode::presence;
  if (name == "frequency") return FeatureMode::frequency;
  return std::nullopt;
}

std::uint64_t FeatureVector::value_sum() const noexcept {
  std::uint64_t sum = 0;
  for (const auto& e : entries) sum += e.value;
  return sum;
}

FeatureVector vectorize(const NormalizedTweet& tweet, const Vocabulary& vocab, FeatureMode mode) {
  std::map<std::uint32_t, std::uint32_t> counts;
  const auto& tokens = tweet.tokens;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (const auto idx = vocab.unigram_index(tokens[i])) ++counts[*idx];
    if (i > 0) {
      if (const auto idx = vocab.bigram_index(tokens[i - 1], tokens[i])) ++counts[*idx];
    }
  }
  FeatureVector fv;
  fv.mode = mode;
  fv.entries.reserve(counts.size());
  for (const auto& [index, count] : counts) {
    fv.entries.push_back({index, mode == FeatureMode::presence ? 1u : count});
  }
  return fv;
}

}  // namespace tweetiment
