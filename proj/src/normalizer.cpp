#include "tweetiment/normalizer.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <set>

#include "tweetiment/error.hpp"

namespace tweetiment {
namespace {

constexpr bool is_space(char c) noexcept {
  return c == ' ' || c == '\t' || c == '\n' || c == '\v' || c == '\f' || c == '\r';
}

constexpr bool is_ascii_letter(char c) noexcept {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

constexpr bool is_ascii_digit(char c) noexcept { return c >= '0' && c <= '9'; }

// Word characters as seen by \b in a byte-oriented ECMAScript regex.
constexpr bool is_word_char(char c) noexcept {
  return is_ascii_letter(c) || is_ascii_digit(c) || c == '_';
}

constexpr bool is_edge_punct(char c) noexcept {
  switch (c) {
    case '\'': case '?': case '!': case '.': case ',': case '(': case ')':
      return true;
    default:
      return false;
  }
}

char32_t lower_code_point(char32_t cp) noexcept {
  if (cp < 0x80) return (cp >= 'A' && cp <= 'Z') ? cp + 0x20 : cp;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
  if (cp >= 0x100 && cp <= 0x17F) {
    if (cp == 0x130) return U'i';
    if (cp == 0x178) return 0xFF;
    const bool even_upper = (cp <= 0x137) || (cp >= 0x14A && cp <= 0x177);
    const bool odd_upper = (cp >= 0x139 && cp <= 0x148) || (cp >= 0x179 && cp <= 0x17E);
    if ((even_upper && cp % 2 == 0) || (odd_upper && cp % 2 == 1)) return cp + 1;
    return cp;
  }
  if (cp >= 0x391 && cp <= 0x3AB && cp != 0x3A2) return cp + 0x20;
  if (cp == 0x386) return 0x3AC;
  if (cp >= 0x388 && cp <= 0x38A) return cp + 37;
  if (cp == 0x38C) return 0x3CC;
  if (cp == 0x38E || cp == 0x38F) return cp + 63;
  if (cp >= 0x400 && cp <= 0x40F) return cp + 0x50;
  if (cp >= 0x410 && cp <= 0x42F) return cp + 0x20;
  if (((cp >= 0x460 && cp <= 0x481) || (cp >= 0x48A && cp <= 0x4BF)) && cp % 2 == 0) {
    return cp + 1;
  }
  if (cp >= 0x531 && cp <= 0x556) return cp + 0x30;
  if (cp >= 0x1E00 && cp <= 0x1EFF && cp % 2 == 0 && !(cp >= 0x1E96 && cp <= 0x1E9F)) {
    return cp + 1;
  }
  if (cp >= 0xFF21 && cp <= 0xFF3A) return cp + 0x20;
  return cp;
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

// Decodes one UTF-8 sequence at `pos`. Returns 0 length for malformed input.
std::size_t decode_utf8(std::string_view s, std::size_t pos, char32_t& cp) noexcept {
  const auto lead = static_cast<unsigned char>(s[pos]);
  std::size_t len = 0;
  if (lead < 0x80) {
    cp = lead;
    return 1;
  } else if ((lead & 0xE0) == 0xC0) {
    len = 2;
    cp = lead & 0x1F;
  } else if ((lead & 0xF0) == 0xE0) {
    len = 3;
    cp = lead & 0x0F;
  } else if ((lead & 0xF8) == 0xF0) {
    len = 4;
    cp = lead & 0x07;
  } else {
    return 0;
  }
  if (pos + len > s.size()) return 0;
  for (std::size_t k = 1; k < len; ++k) {
    const auto byte = static_cast<unsigned char>(s[pos + k]);
    if ((byte & 0xC0) != 0x80) return 0;
    cp = (cp << 6) | (byte & 0x3F);
  }
  return len;
}

// Matches `\S+` starting at `pos`; returns the end of the run.
std::size_t non_space_run_end(std::string_view s, std::size_t pos) noexcept {
  while (pos < s.size() && !is_space(s[pos])) ++pos;
  return pos;
}

// Length of the URL prefix ("www.", "http://", "https://") at `pos`, or 0.
std::size_t url_prefix_at(std::string_view s, std::size_t pos) noexcept {
  const auto rest = s.substr(pos);
  if (rest.starts_with("www.")) return 4;
  if (rest.starts_with("http://")) return 7;
  if (rest.starts_with("https://")) return 8;
  return 0;
}

std::string replace_urls_with(std::string_view text, std::string_view replacement) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    const std::size_t prefix = url_prefix_at(text, i);
    if (prefix > 0 && i + prefix < text.size() && !is_space(text[i + prefix])) {
      out += replacement;
      i = non_space_run_end(text, i + prefix);
    } else {
      out.push_back(text[i++]);
    }
  }
  return out;
}

std::string_view strip_edge_punct(std::string_view word) noexcept {
  while (!word.empty() && is_edge_punct(word.front())) word.remove_prefix(1);
  while (!word.empty() && is_edge_punct(word.back())) word.remove_suffix(1);
  return word;
}

// Rewrites runs of 3+ identical ASCII letters to exactly two.
void compress_letter_runs(std::string& word) {
  std::size_t write = 0;
  for (std::size_t read = 0; read < word.size(); ++read) {
    const char c = word[read];
    if (write >= 2 && is_ascii_letter(c) && word[write - 1] == c && word[write - 2] == c) {
      continue;
    }
    word[write++] = c;
  }
  word.resize(write);
}

std::string trim_copy(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> normalized_forms(std::vector<std::string> forms) {
  for (auto& f : forms) f = to_lower(f);
  std::sort(forms.begin(), forms.end());
  forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
  return forms;
}

}  // namespace

std::string_view to_string(SpecialToken token) noexcept {
  switch (token) {
    case SpecialToken::url: return kUrlToken;
    case SpecialToken::user_mention: return kUserMentionToken;
    case SpecialToken::emo_pos: return kEmoPosToken;
    case SpecialToken::emo_neg: return kEmoNegToken;
  }
  return {};
}

std::optional<SpecialToken> special_token_of(std::string_view token) noexcept {
  if (token == kUrlToken) return SpecialToken::url;
  if (token == kUserMentionToken) return SpecialToken::user_mention;
  if (token == kEmoPosToken) return SpecialToken::emo_pos;
  if (token == kEmoNegToken) return SpecialToken::emo_neg;
  return std::nullopt;
}

EmoticonTable::EmoticonTable(std::vector<std::string> positive, std::vector<std::string> negative)
    : positive_(normalized_forms(std::move(positive))),
      negative_(normalized_forms(std::move(negative))) {
  if (positive_.empty() || negative_.empty()) {
    throw Error(ErrorCode::empty_input, "emoticon table needs positive and negative forms");
  }
  for (const auto* forms : {&positive_, &negative_}) {
    for (const auto& f : *forms) {
      if (f.empty()) throw Error(ErrorCode::empty_input, "empty emoticon form");
    }
  }
  std::vector<std::string> shared;
  std::set_intersection(positive_.begin(), positive_.end(), negative_.begin(), negative_.end(),
                        std::back_inserter(shared));
  if (!shared.empty()) {
    throw Error(ErrorCode::emoticon_conflict,
                "'" + shared.front() + "' is listed as both positive and negative");
  }
  for (const auto& f : positive_) by_length_.push_back({f, SpecialToken::emo_pos});
  for (const auto& f : negative_) by_length_.push_back({f, SpecialToken::emo_neg});
  std::stable_sort(by_length_.begin(), by_length_.end(),
                   [](const Entry& a, const Entry& b) { return a.form.size() > b.form.size(); });
}

const EmoticonTable& EmoticonTable::defaults() {
  static const EmoticonTable table(
      {// smile
       ":)", ": )", ":-)", "(:", "( :", "(-:", ":')",
       // laugh
       ":d", ": d", ":-d", "xd", "x-d",
       // wink
       ";-)", ";)", ";-d", ";d", "(;", "(-;",
       // love
       "<3", ":*"},
      {// sad
       ":-(", ": (", ":(", "):", ")-:",
       // cry
       ":,(", ":'(", ":\"("});
  return table;
}

std::vector<std::string> EmoticonTable::read_forms(std::istream& in) {
  std::vector<std::string> forms;
  std::string line;
  while (std::getline(in, line)) {
    auto form = trim_copy(line);
    if (form.empty() || form.front() == '#') continue;
    forms.push_back(std::move(form));
  }
  return forms;
}

EmoticonTable EmoticonTable::from_files(const std::filesystem::path& positive_file,
                                        const std::filesystem::path& negative_file) {
  auto read = [](const std::filesystem::path& p) {
    std::ifstream in(p);
    if (!in) throw Error(ErrorCode::io_failure, "cannot open " + p.string());
    return read_forms(in);
  };
  return EmoticonTable(read(positive_file), read(negative_file));
}

std::optional<EmoticonTable::Match> EmoticonTable::match_at(std::string_view text,
                                                            std::size_t pos) const noexcept {
  const auto rest = text.substr(pos);
  for (const auto& e : by_length_) {
    if (rest.starts_with(e.form)) return Match{e.form.size(), e.token};
  }
  return std::nullopt;
}

std::string to_lower(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    char32_t cp = 0;
    const std::size_t len = decode_utf8(text, i, cp);
    if (len == 0) {
      out.push_back(text[i++]);
      continue;
    }
    if (len == 1) {
      out.push_back(static_cast<char>(lower_code_point(cp)));
    } else {
      append_utf8(out, lower_code_point(cp));
    }
    i += len;
  }
  return out;
}

std::string collapse_dots(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '.' && i + 1 < text.size() && text[i + 1] == '.') {
      while (i < text.size() && text[i] == '.') ++i;
      out.push_back(' ');
    } else {
      out.push_back(text[i++]);
    }
  }
  return out;
}

std::string trim_spaces_and_quotes(std::string_view text) {
  constexpr std::string_view strip = " \"'";
  const auto b = text.find_first_not_of(strip);
  if (b == std::string_view::npos) return {};
  const auto e = text.find_last_not_of(strip);
  return std::string(text.substr(b, e - b + 1));
}

std::string collapse_whitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool in_space = false;
  for (const char c : text) {
    if (is_space(c)) {
      if (!in_space) out.push_back(' ');
      in_space = true;
    } else {
      out.push_back(c);
      in_space = false;
    }
  }
  return out;
}

std::string remove_retweet_markers(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    const bool starts = text.substr(i).starts_with("rt");
    const bool left_edge = i == 0 || !is_word_char(text[i - 1]);
    const bool right_edge = i + 2 >= text.size() || !is_word_char(text[i + 2]);
    if (starts && left_edge && right_edge) {
      i += 2;
    } else {
      out.push_back(text[i++]);
    }
  }
  return out;
}

std::string replace_urls(std::string_view text) { return replace_urls_with(text, kUrlToken); }

std::string replace_user_mentions(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    const bool at_boundary = i == 0 || is_space(text[i - 1]);
    if (text[i] == '@' && at_boundary && i + 1 < text.size() && !is_space(text[i + 1])) {
      out += kUserMentionToken;
      i = non_space_run_end(text, i + 1);
    } else {
      out.push_back(text[i++]);
    }
  }
  return out;
}

std::string replace_emoticons(std::string_view text, const EmoticonTable& emoticons) {
  std::string out;
  out.reserve(text.size() + 16);
  std::size_t i = 0;
  while (i < text.size()) {
    if (const auto m = emoticons.match_at(text, i)) {
      out.push_back(' ');
      out += to_string(m->token);
      out.push_back(' ');
      i += m->length;
    } else {
      out.push_back(text[i++]);
    }
  }
  return out;
}

std::string replace_hashtags(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '#' && i + 1 < text.size() && !is_space(text[i + 1])) {
      const std::size_t end = non_space_run_end(text, i + 1);
      out.append(text.substr(i + 1, end - i - 1));
      i = end;
    } else {
      out.push_back(text[i++]);
    }
  }
  return out;
}

bool is_valid_word(std::string_view word) noexcept {
  if (word.empty() || !is_ascii_letter(word.front())) return false;
  return std::all_of(word.begin() + 1, word.end(), [](char c) {
    return is_ascii_letter(c) || is_ascii_digit(c) || c == '.' || c == '_';
  });
}

std::optional<std::string> normalize_word(std::string_view word) {
  std::string w(strip_edge_punct(word));
  compress_letter_runs(w);
  std::erase_if(w, [](char c) { return c == '-' || c == '\''; });
  // Deleting '-' can expose edge punctuation ("a.-") or join letter runs
  // ("so-ooo"); a second pass keeps the result idempotent.
  w = std::string(strip_edge_punct(w));
  compress_letter_runs(w);

  if (!is_valid_word(w)) return std::nullopt;
  return w;
}

NormalizedTweet normalize_tweet(std::string_view raw, const EmoticonTable& emoticons) {
  std::string text = to_lower(raw);
  text = collapse_dots(text);
  text = trim_spaces_and_quotes(text);
  text = collapse_whitespace(text);
  text = remove_retweet_markers(text);
  // Padded so a URL glued to a preceding word still yields a standalone token.
  text = replace_urls_with(text, " URL ");
  text = replace_user_mentions(text);
  text = replace_emoticons(text, emoticons);
  text = replace_hashtags(text);
  // "#www.example.com" unwraps into a URL
  text = replace_urls_with(text, " URL ");

  NormalizedTweet result;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    const std::size_t end = non_space_run_end(text, i);
    if (end == i) break;
    const std::string_view word(text.data() + i, end - i);
    if (special_token_of(word)) {
      result.tokens.emplace_back(word);
    } else if (auto w = normalize_word(word)) {
      result.tokens.push_back(std::move(*w));
    }
    i = end;
  }
  return result;
}

std::string join_tokens(const NormalizedTweet& tweet) {
  std::string out;
  for (const auto& t : tweet.tokens) {
    if (!out.empty()) out.push_back(' ');
    out += t;
  }
  return out;
}

NormalizedTweet split_tokens(std::string_view joined) {
  NormalizedTweet tweet;
  std::size_t i = 0;
  while (i < joined.size()) {
    while (i < joined.size() && is_space(joined[i])) ++i;
    const std::size_t end = non_space_run_end(joined, i);
    if (end > i) tweet.tokens.emplace_back(joined.substr(i, end - i));
    i = end;
  }
  return tweet;
}

}  // namespace tweetiment
