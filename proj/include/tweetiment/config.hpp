#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace tweetiment {

inline constexpr const char* kConfigEnvVar = "TWEETIMENT_CONFIG";

/// `key = value` settings. '#' and ';' start comment lines. Keys are
/// case-sensitive and '-' is read as '_', so "max-iter" and "max_iter" agree.
class Config {
 public:
  static Config parse(std::istream& in);
  static Config load(const std::filesystem::path& path);

  std::optional<std::string> get(std::string_view key) const;
  void set(std::string_view key, std::string value);
  const std::map<std::string, std::string>& values() const noexcept { return values_; }

  static std::string canonical_key(std::string_view key);

 private:
  std::map<std::string, std::string> values_;
};

}  // namespace tweetiment
