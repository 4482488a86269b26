#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "artifacts.hpp"
#include "ncpark/collapse.hpp"
#include "ncpark/limits.hpp"

namespace ncpark::cli {

/// Bad flags or parameters; exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Text, Json };

struct RunConfig {
  std::vector<int> ns;
  std::optional<int> k;
  std::string e = "bottom";
  CollapseOptions collapse;
  std::filesystem::path cache_dir;
  Format format = Format::Text;
  bool allow_large = false;

  EnumerationLimits limits() const { return allow_large ? EnumerationLimits::unlimited() : EnumerationLimits{}; }
  /// Throws ResourceLimit when n exceeds `cap` and --allow-large is off.
  void require_cap(int n, int cap, const std::string& what) const;
};

/// "4" or "3-5".
std::vector<int> parse_n_range(const std::string& text);

int cmd_enumerate(const std::string& kind, const RunConfig& cfg, std::ostream& out);
int cmd_bijections(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const std::string& theorem, const RunConfig& cfg, std::ostream& out);
int cmd_export(const std::string& object, const std::string& format, const std::string& output, const RunConfig& cfg,
               std::ostream& out);
int cmd_replay(const std::string& certificate, const std::string& complex, const std::string& target,
               std::ostream& out);

}  // namespace ncpark::cli
