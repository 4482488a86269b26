#include "artifacts.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ncpark/errors.hpp"
#include "ncpark/text_format.hpp"

namespace ncpark::cli {

namespace fs = std::filesystem;

fs::path resolve_cache_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("NCPARK_CACHE_DIR"); env && *env) return env;
  return "ncpark-cache";
}

void write_atomic(const fs::path& path, const std::string& contents) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << contents;
    if (!out.flush()) throw std::runtime_error("cannot write " + tmp.string());
  }
  fs::rename(tmp, path);
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedInput("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::uint64_t CacheFile::body_hash() const {
  std::string body;
  for (const auto& line : lines) body += line + "\n";
  return fnv1a64(body);
}

std::string CacheFile::to_text() const {
  std::string out = "# ncpark " + kind + " n=" + std::to_string(n) + " count=" + std::to_string(lines.size()) +
                    " hash=" + hex64(body_hash()) + "\n";
  for (const auto& line : lines) out += line + "\n";
  return out;
}

CacheFile CacheFile::parse(const std::string& text) {
  std::istringstream in(text);
  std::string header;
  if (!std::getline(in, header)) throw MalformedInput("empty cache file");
  std::istringstream h(header);
  std::string hash_mark, tag, n_field, count_field, hash_field;
  CacheFile file;
  h >> hash_mark >> tag >> file.kind >> n_field >> count_field >> hash_field;
  if (hash_mark != "#" || tag != "ncpark" || n_field.rfind("n=", 0) != 0 || count_field.rfind("count=", 0) != 0 ||
      hash_field.rfind("hash=", 0) != 0)
    throw MalformedInput("bad cache header '" + header + "'");
  file.n = std::stoi(n_field.substr(2));
  std::size_t count = std::stoull(count_field.substr(6));
  std::string line;
  while (std::getline(in, line)) file.lines.push_back(line);
  if (file.lines.size() != count) throw MalformedInput("cache count does not match its body");
  if (hex64(file.body_hash()) != hash_field.substr(5)) throw MalformedInput("cache hash does not match its body");
  return file;
}

CacheStatus sync_cache(const fs::path& path, const CacheFile& fresh) {
  if (!fs::exists(path)) {
    write_atomic(path, fresh.to_text());
    return CacheStatus::Written;
  }
  CacheFile stored;
  try {
    stored = CacheFile::parse(read_file(path));
  } catch (const MalformedInput& e) {
    throw VerificationFailure("cache file " + path.string() + " is corrupt: " + e.what());
  }
  if (stored.kind != fresh.kind || stored.n != fresh.n || stored.lines != fresh.lines)
    throw VerificationFailure("cache file " + path.string() + " disagrees with a fresh enumeration");
  return CacheStatus::Verified;
}

void RunDocument::add(Json instance, double elapsed_ms) {
  instances.push_back(std::move(instance));
  timings_ms.push_back(elapsed_ms);
}

bool RunDocument::passed() const {
  for (const auto& i : instances)
    if (i.value("verdict", "FAIL") != "PASS") return false;
  return true;
}

Json RunDocument::to_json() const {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = command;
  doc["instances"] = instances;
  doc["verdict"] = passed() ? "PASS" : "FAIL";
  doc["determinism_hash"] = determinism_hash(doc);
  doc["timings_ms"] = timings_ms;
  return doc;
}

std::string RunDocument::determinism_hash(const Json& document) {
  Json stripped = document;
  stripped.erase("timings_ms");
  stripped.erase("determinism_hash");
  return hex64(fnv1a64(stripped.dump()));
}

}  // namespace ncpark::cli
