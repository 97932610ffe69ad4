#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace posetpoly {

inline constexpr std::string_view kVersion = "0.1.0";

// On-disk store of command output under <dir>/<32 hex digits>.json. The name
// is a hash of the full key, and the key starts with the version string, so
// a new version never reads old entries.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir);

  static std::string address(std::string_view key);

  std::optional<std::string> get(std::string_view key) const;
  // Writes through a temporary file and a rename. Throws IoError.
  void put(std::string_view key, std::string_view value) const;

  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
};

// Version, canonical poset JSON and the options that affect the output.
std::string cache_key(std::string_view poset_json, std::string_view command,
                      std::string_view method, std::string_view kind, int max_brute,
                      std::string_view format);

}  // namespace posetpoly
