#include "posetpoly/cache.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include "posetpoly/errors.hpp"

namespace posetpoly {

namespace {

std::uint64_t fnv1a(std::string_view s, std::uint64_t h) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::string ResultCache::address(std::string_view key) {
  char buf[33];
  std::snprintf(buf, sizeof buf, "%016llx%016llx",
                static_cast<unsigned long long>(fnv1a(key, 0xcbf29ce484222325ULL)),
                static_cast<unsigned long long>(fnv1a(key, 0x84222325cbf29ce4ULL)));
  return buf;
}

std::optional<std::string> ResultCache::get(std::string_view key) const {
  std::ifstream in(dir_ / (address(key) + ".json"), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void ResultCache::put(std::string_view key, std::string_view value) const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw IoError("cannot create cache directory " + dir_.string() + ": " + ec.message());
  const std::string name = address(key);
  std::ostringstream tid;
  tid << std::this_thread::get_id();
  const auto tmp = dir_ / (name + ".tmp" + tid.str());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out.write(value.data(), static_cast<std::streamsize>(value.size()));
    if (!out) throw IoError("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, dir_ / (name + ".json"), ec);
  if (ec) throw IoError("cannot store cache entry: " + ec.message());
}

std::string cache_key(std::string_view poset_json, std::string_view command,
                      std::string_view method, std::string_view kind, int max_brute,
                      std::string_view format) {
  std::string key = "posetpoly ";
  key += kVersion;
  key += "\n";
  key += poset_json;
  key += "\n";
  key += command;
  key += " method=" + std::string(method) + " kind=" + std::string(kind) +
         " max_brute=" + std::to_string(max_brute) + " format=" + std::string(format);
  return key;
}

}  // namespace posetpoly
