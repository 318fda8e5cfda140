#pragma once

// Random inputs for property tests.

#include <random>
#include <string>
#include <vector>

#include "tweetiment/features.hpp"
#include "tweetiment/normalizer.hpp"

namespace gen {

// Raw tweet-like text mixing words, emoticons, URLs, mentions, hashtags,
// punctuation, whitespace and stray non-ASCII bytes.
inline std::string raw_tweet(std::mt19937& rng) {
  static const std::vector<std::string> pieces = {
      "a", "b", "so", "oooo", "Happy", "HEY", "rt", "RT", "t-shirt", "their's", "x", "d", "D",
      "2fast", "hello_2.0", "r.i.p.", ":)", ":(", ": )", ":-D", "xD", "<3", ":'(", "):", ";)",
      "(:", "@", "@bob", "a@b", "#", "#tag", "##x", "http://", "https://x.co/a", "www.", "www.ex.com",
      "...", "..", ".", ",", "!", "?", "(", ")", "'", "\"", "-", "_", "*", "\t", "\n", "  ", " ",
      "\xc3\x89", "\xe2\x80\x99", "\xff", "URL", "EMO_POS", "user_mention", "123", "lool", "zzzz"};
  std::uniform_int_distribution<std::size_t> count(0, 14);
  std::uniform_int_distribution<std::size_t> pick(0, pieces.size() - 1);
  std::bernoulli_distribution space(0.6);
  std::string s;
  const auto n = count(rng);
  for (std::size_t k = 0; k < n; ++k) {
    s += pieces[pick(rng)];
    if (space(rng)) s += ' ';
  }
  return s;
}

inline tweetiment::NormalizedTweet token_tweet(std::mt19937& rng, std::size_t vocab_words,
                                               std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> word(0, vocab_words - 1);
  tweetiment::NormalizedTweet t;
  const auto n = len(rng);
  for (std::size_t k = 0; k < n; ++k) t.tokens.push_back("w" + std::to_string(word(rng)));
  return t;
}

}  // namespace gen
