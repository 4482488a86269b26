#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace ncpark::cli {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Explicit flag, then NCPARK_CACHE_DIR, then ./ncpark-cache.
std::filesystem::path resolve_cache_dir(const std::string& flag);

/// Writes to a sibling temporary file, then renames over `path`.
void write_atomic(const std::filesystem::path& path, const std::string& contents);
std::string read_file(const std::filesystem::path& path);

/// A cache file: header "# ncpark <kind> n=<n> count=<c> hash=<hex>" and
/// one canonical serialization per line.
struct CacheFile {
  std::string kind;
  int n = 0;
  std::vector<std::string> lines;

  std::uint64_t body_hash() const;
  std::string to_text() const;
  /// Throws MalformedInput when the header is malformed or the stored hash
  /// or count disagree with the body.
  static CacheFile parse(const std::string& text);
};

enum class CacheStatus { Written, Verified };

/// Writes the cache file, or, when one exists, checks it against `fresh`.
/// Throws VerificationFailure on a mismatch.
CacheStatus sync_cache(const std::filesystem::path& path, const CacheFile& fresh);

struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A run document: schema version, command, instances, overall verdict, and
/// a determinism hash over everything except timings.
struct RunDocument {
  std::string command;
  Json instances = Json::array();
  std::vector<double> timings_ms;

  void add(Json instance, double elapsed_ms);
  bool passed() const;
  Json to_json() const;
  static std::string determinism_hash(const Json& document);
};

}  // namespace ncpark::cli
