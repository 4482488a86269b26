#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ncpark/simplicial_complex.hpp"

namespace ncpark {

struct CollapseStep {
  Simplex free_face;
  Simplex coface;

  bool operator==(const CollapseStep&) const = default;
};

/// An elementary collapse sequence. The target is either a single vertex or
/// a subcomplex identified by its content hash.
struct CollapseCertificate {
  std::uint64_t start_hash = 0;
  std::optional<std::uint64_t> target_hash;  // nullopt: collapse to a point
  std::vector<CollapseStep> steps;

  /// Header lines, then one "free=<face>;coface=<face>" line per step.
  std::string to_text() const;
  /// Throws MalformedInput on a bad header or step line.
  static CollapseCertificate parse(std::string_view text);

  bool operator==(const CollapseCertificate&) const = default;
};

struct CollapseOptions {
  int backtrack_depth = 8;
  int restarts = 32;
  std::uint64_t seed = 0;
  /// Alternatives tried at each backtracking point.
  int branch_width = 16;
};

/// Greedy collapse removing the lexicographically smallest free face, with
/// bounded backtracking on a stall and then seeded random restarts. nullopt
/// means no sequence was found under the strategy.
std::optional<CollapseCertificate> collapse_to_point(const SimplicialComplex& x, const CollapseOptions& options = {});

/// Same search, never removing faces of `target`, until exactly `target`
/// remains. Throws ContractViolation unless target is a subcomplex of x.
std::optional<CollapseCertificate> collapse_onto(const SimplicialComplex& x, const SimplicialComplex& target,
                                                 const CollapseOptions& options = {});

struct ReplayResult {
  bool ok = false;
  std::string message;
  std::size_t steps_applied = 0;
};

/// Checks a certificate against x from scratch: the start hash, each step's
/// freeness, and the final state (one vertex, or exactly `target`).
ReplayResult replay_certificate(const SimplicialComplex& x, const CollapseCertificate& cert,
                                const SimplicialComplex* target = nullptr);

}  // namespace ncpark
