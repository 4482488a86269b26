#include "ncpark/certify.hpp"

namespace ncpark {

std::string_view tier_name(Tier t) {
  switch (t) {
    case Tier::Collapsible: return "COLLAPSIBLE";
    case Tier::HomologyPoint: return "HOMOLOGY_POINT";
    case Tier::NotHomologyPoint: return "NOT_HOMOLOGY_POINT";
    case Tier::Inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

CertificationReport certify_contractible(const SimplicialComplex& x, const CertifyOptions& options) {
  CertificationReport report;
  auto with_homology = [&] {
    if (x.face_count() > options.homology_face_cap) return false;
    EnumerationLimits limits;
    limits.max_faces = options.homology_face_cap;
    report.homology = reduced_homology(x, limits);
    return true;
  };

  if (!x.empty()) {
    if (auto cert = collapse_to_point(x, options.collapse)) {
      auto replay = replay_certificate(x, *cert);
      if (replay.ok) {
        report.tier = Tier::Collapsible;
        report.certificate = std::move(cert);
        report.note = "collapses to a point in " + std::to_string(report.certificate->steps.size()) + " steps";
        if (options.always_homology) with_homology();
        return report;
      }
      report.note = "collapse found but replay failed: " + replay.message + "; ";
    } else {
      report.note = "no collapse sequence found under the strategy; ";
    }
  }
  if (!with_homology()) {
    report.tier = Tier::Inconclusive;
    report.note += "homology skipped above the face cap";
    return report;
  }
  if (report.homology->is_trivial()) {
    report.tier = Tier::HomologyPoint;
    report.note += "reduced homology vanishes, which does not by itself imply contractibility";
  } else {
    report.tier = Tier::NotHomologyPoint;
    report.note += "nontrivial reduced homology: " + report.homology->to_string();
    if (!report.note.empty() && report.note.back() == '\n') report.note.pop_back();
  }
  return report;
}

}  // namespace ncpark
