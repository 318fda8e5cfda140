#pragma once

#include <array>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tweetiment {

enum class SpecialToken { url, user_mention, emo_pos, emo_neg };

inline constexpr std::string_view kUrlToken = "URL";
inline constexpr std::string_view kUserMentionToken = "USER_MENTION";
inline constexpr std::string_view kEmoPosToken = "EMO_POS";
inline constexpr std::string_view kEmoNegToken = "EMO_NEG";

std::string_view to_string(SpecialToken token) noexcept;

// Returns the special token a string renders, if it is exactly one of them.
std::optional<SpecialToken> special_token_of(std::string_view token) noexcept;

/// Literal emoticon forms mapped to EMO_POS / EMO_NEG.
///
/// Matching runs against lowercased text, so forms containing letters must be
/// listed in lowercase (":d", "xd", ...). Positive and negative sets are
/// disjoint and nonempty; construction throws Error(emoticon_conflict) or
/// Error(empty_input) otherwise.
class EmoticonTable {
 public:
  EmoticonTable(std::vector<std::string> positive, std::vector<std::string> negative);

  // Smile, laugh, wink and love forms are positive; sad and cry forms negative.
  static const EmoticonTable& defaults();

  // One emoticon per line, '#' starts a comment line, blank lines ignored.
  static EmoticonTable from_files(const std::filesystem::path& positive_file,
                                  const std::filesystem::path& negative_file);
  static std::vector<std::string> read_forms(std::istream& in);

  const std::vector<std::string>& positive_forms() const noexcept { return positive_; }
  const std::vector<std::string>& negative_forms() const noexcept { return negative_; }

  struct Match {
    std::size_t length = 0;
    SpecialToken token = SpecialToken::emo_pos;
  };
  // Longest form starting at `pos`, if any.
  std::optional<Match> match_at(std::string_view text, std::size_t pos) const noexcept;

 private:
  struct Entry {
    std::string form;
    SpecialToken token;
  };
  std::vector<std::string> positive_;
  std::vector<std::string> negative_;
  std::vector<Entry> by_length_;  // longest first
};

struct NormalizedTweet {
  std::vector<std::string> tokens;

  bool operator==(const NormalizedTweet&) const = default;
};

// Tweet-level rewriting steps. Each one is usable on its own.
std::string to_lower(std::string_view text);
std::string collapse_dots(std::string_view text);
std::string trim_spaces_and_quotes(std::string_view text);
std::string collapse_whitespace(std::string_view text);
std::string remove_retweet_markers(std::string_view text);
std::string replace_urls(std::string_view text);
std::string replace_user_mentions(std::string_view text);
std::string replace_emoticons(std::string_view text, const EmoticonTable& emoticons);
std::string replace_hashtags(std::string_view text);

// Word-level steps.
bool is_valid_word(std::string_view word) noexcept;
std::optional<std::string> normalize_word(std::string_view word);

NormalizedTweet normalize_tweet(std::string_view raw,
                                const EmoticonTable& emoticons = EmoticonTable::defaults());

std::string join_tokens(const NormalizedTweet& tweet);
NormalizedTweet split_tokens(std::string_view joined);

}  // namespace tweetiment
