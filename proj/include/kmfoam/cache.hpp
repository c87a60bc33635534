#pragma once

// Content-addressed store of Gram entries.
//
// Keys are SHA-256 digests: a half-foam is keyed by the digest of its text
// form, a pair by the digest of its two foam digests in sorted order, so
// (i, j) and (j, i) share one entry. The store is an append-only text file,
// one entry per line:
//
//   <pair key> <value> <microseconds> <check>
//
// where <check> is the first 16 hex digits of the SHA-256 of the rest of the
// line. Lines are appended whole, so concurrent writers of the same entry only
// produce duplicates, which are harmless.

#include <openssl/evp.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>

#include "kmfoam/canonical.hpp"
#include "kmfoam/error.hpp"

namespace kmfoam {

inline std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr))
    throw InvariantError("SHA-256 failed");
  return to_hex(std::string(reinterpret_cast<const char*>(md), len));
}

inline std::string pair_key(const std::string& a, const std::string& b) {
  return a <= b ? sha256_hex(a + b) : sha256_hex(b + a);
}

class CacheCorruption : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

struct CacheStats {
  std::size_t entries = 0;
  std::size_t lines = 0;
  std::size_t bad_lines = 0;
  std::uintmax_t bytes = 0;
};

class EvalCache {
 public:
  /// Opens (creating if needed) the store in `dir`. Throws CacheCorruption
  /// on a line whose check digits do not match, unless `tolerant`.
  explicit EvalCache(std::filesystem::path dir, bool tolerant = false) : path_(std::move(dir) / "entries.log") {
    std::error_code ec;
    std::filesystem::create_directories(path_.parent_path(), ec);
    if (ec) throw ValidationError("cannot create cache directory " + path_.parent_path().string());
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line)) {
      ++stats_.lines;
      std::string key, value;
      if (!parse_line(line, key, value)) {
        ++stats_.bad_lines;
        if (!tolerant) throw CacheCorruption("cache line " + std::to_string(stats_.lines) + " fails its checksum");
        continue;
      }
      entries_.emplace(std::move(key), std::move(value));
    }
    stats_.entries = entries_.size();
    out_.open(path_, std::ios::app);
    if (!out_) throw ValidationError("cache file is not writable: " + path_.string());
  }

  std::optional<std::string> lookup(const std::string& key) const {
    std::lock_guard lock(mu_);
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  void store(const std::string& key, const std::string& value, std::int64_t micros) {
    if (value.find_first_of(" \n") != std::string::npos) throw InvariantError("cache value contains a separator");
    std::lock_guard lock(mu_);
    if (!entries_.emplace(key, value).second) return;
    std::string body = key + " " + value + " " + std::to_string(micros);
    out_ << body << ' ' << sha256_hex(body).substr(0, 16) << '\n';
    out_.flush();
  }

  CacheStats stats() const {
    std::lock_guard lock(mu_);
    CacheStats s = stats_;
    s.entries = entries_.size();
    std::error_code ec;
    s.bytes = std::filesystem::file_size(path_, ec);
    return s;
  }

  const std::filesystem::path& path() const { return path_; }

  /// Default location: $KMFOAM_CACHE_DIR, else .kmfoam-cache.
  static std::filesystem::path default_dir() {
    const char* env = std::getenv("KMFOAM_CACHE_DIR");
    return env && *env ? std::filesystem::path(env) : std::filesystem::path(".kmfoam-cache");
  }

 private:
  static bool parse_line(const std::string& line, std::string& key, std::string& value) {
    auto cut = line.rfind(' ');
    if (cut == std::string::npos) return false;
    std::string body = line.substr(0, cut);
    if (sha256_hex(body).substr(0, 16) != line.substr(cut + 1)) return false;
    std::istringstream in(body);
    std::int64_t micros;
    return static_cast<bool>(in >> key >> value >> micros);
  }

  std::filesystem::path path_;
  mutable std::mutex mu_;
  std::unordered_map<std::string, std::string> entries_;
  std::ofstream out_;
  CacheStats stats_;
};

}  // namespace kmfoam
