#include "tweetiment/config.hpp"

#include <fstream>
#include <istream>

#include "tweetiment/error.hpp"

namespace tweetiment {
namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::string Config::canonical_key(std::string_view key) {
  std::string out(trim(key));
  for (auto& c : out) {
    if (c == '-') c = '_';
  }
  return out;
}

Config Config::parse(std::istream& in) {
  Config cfg;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#' || body.front() == ';') continue;
    const auto eq = body.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::invalid_config,
                  "line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const auto key = canonical_key(body.substr(0, eq));
    if (key.empty()) {
      throw Error(ErrorCode::invalid_config, "line " + std::to_string(line_no) + ": empty key");
    }
    cfg.values_[key] = std::string(trim(body.substr(eq + 1)));
  }
  return cfg;
}

Config Config::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::invalid_config, "cannot open config " + path.string());
  return parse(in);
}

std::optional<std::string> Config::get(std::string_view key) const {
  const auto it = values_.find(canonical_key(key));
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

void Config::set(std::string_view key, std::string value) {
  values_[canonical_key(key)] = std::move(value);
}

}  // namespace tweetiment
