#include "ncpark/retraction.hpp"

#include <algorithm>

#include "ncpark/errors.hpp"

namespace ncpark {

BarycentricPoint::BarycentricPoint(RationalVector weights) {
  mpq_class total = 0;
  for (auto& [v, w] : weights) {
    w.canonicalize();
    if (sgn(w) < 0) throw MalformedInput("barycentric weight of " + v.to_string() + " is negative");
    if (sgn(w) > 0) weights_.emplace(v, w);
    total += w;
  }
  if (total != 1) throw MalformedInput("barycentric weights sum to " + total.get_str() + ", not 1");
}

BarycentricPoint BarycentricPoint::barycenter(const Simplex& s) {
  RationalVector w;
  mpq_class share(1, static_cast<unsigned long>(s.size()));
  for (Vertex v : s.vertices()) w.emplace(v, share);
  return BarycentricPoint(std::move(w));
}

mpq_class BarycentricPoint::weight(Vertex v) const {
  auto it = weights_.find(v);
  return it == weights_.end() ? mpq_class(0) : it->second;
}

Simplex BarycentricPoint::support() const {
  std::vector<Vertex> vs;
  for (const auto& [v, w] : weights_) vs.push_back(v);
  return Simplex(std::move(vs));
}

std::string BarycentricPoint::to_string() const {
  std::string out;
  for (const auto& [v, w] : weights_) {
    if (!out.empty()) out += ',';
    out += v.to_string() + ":" + w.get_str();
  }
  return out;
}

RetractionProblem::RetractionProblem(Simplex s, Simplex t) : sigma(std::move(s)), tau(std::move(t)) {
  if (!tau.is_face_of(sigma) || tau.size() == sigma.size())
    throw MalformedInput("tau must be a proper nonempty face of sigma");
  std::vector<Vertex> rest;
  std::set_difference(sigma.vertices().begin(), sigma.vertices().end(), tau.vertices().begin(), tau.vertices().end(),
                      std::back_inserter(rest));
  tau_prime = Simplex(std::move(rest));
}

RationalVector retraction_direction(const RetractionProblem& r) {
  RationalVector dir;
  mpq_class down(-1, static_cast<unsigned long>(r.tau.size()));
  mpq_class up(1, static_cast<unsigned long>(r.tau_prime.size()));
  for (Vertex v : r.tau.vertices()) dir.emplace(v, down);
  for (Vertex v : r.tau_prime.vertices()) dir.emplace(v, up);
  return dir;
}

RationalVector translate(const RetractionProblem& r, const BarycentricPoint& p, const mpq_class& t) {
  RationalVector out;
  for (const auto& [v, d] : retraction_direction(r)) {
    mpq_class w = p.weight(v) + t * d;
    out.emplace(v, w);
  }
  return out;
}

mpq_class retraction_time(const RetractionProblem& r, const BarycentricPoint& p) {
  mpq_class m = p.weight(r.tau.vertices().front());
  for (Vertex v : r.tau.vertices()) m = std::min(m, p.weight(v));
  return m * static_cast<unsigned long>(r.tau.size());
}

BarycentricPoint retract_point(const RetractionProblem& r, const BarycentricPoint& p) {
  for (const auto& [v, w] : p.weights())
    if (!r.sigma.contains(v)) throw ContractViolation("point " + p.to_string() + " is not supported on sigma");
  return BarycentricPoint(translate(r, p, retraction_time(r, p)));
}

}  // namespace ncpark
