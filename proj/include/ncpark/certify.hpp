#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ncpark/collapse.hpp"
#include "ncpark/homology.hpp"
#include "ncpark/limits.hpp"
#include "ncpark/simplicial_complex.hpp"

namespace ncpark {

/// Evidence tiers, strongest first. COLLAPSIBLE implies contractible;
/// HOMOLOGY_POINT (trivial reduced integral homology) does not.
enum class Tier { Collapsible, HomologyPoint, NotHomologyPoint, Inconclusive };

std::string_view tier_name(Tier t);  // "COLLAPSIBLE", ...

struct CertificationReport {
  Tier tier = Tier::Inconclusive;
  std::optional<CollapseCertificate> certificate;
  std::optional<HomologyProfile> homology;
  std::string note;
};

struct CertifyOptions {
  CollapseOptions collapse;
  /// Compute homology even when a collapse is found.
  bool always_homology = false;
  /// Skip homology above this many faces.
  std::size_t homology_face_cap = 500'000;
};

/// Tries a collapse to a point (replayed before it is trusted), then falls
/// back to reduced homology. The empty complex is NOT_HOMOLOGY_POINT.
CertificationReport certify_contractible(const SimplicialComplex& x, const CertifyOptions& options = {});

}  // namespace ncpark
