#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

#include "ncpark/simplicial_complex.hpp"

namespace ncpark {

using RationalVector = std::map<Vertex, mpq_class>;

/// A point of a simplex in exact barycentric coordinates: nonnegative
/// rational weights summing to 1. Zero weights are not stored.
class BarycentricPoint {
 public:
  /// Throws MalformedInput on a negative weight or a sum other than 1.
  explicit BarycentricPoint(RationalVector weights);
  static BarycentricPoint barycenter(const Simplex& s);
  static BarycentricPoint vertex(Vertex v) { return BarycentricPoint({{v, mpq_class(1)}}); }

  const RationalVector& weights() const { return weights_; }
  mpq_class weight(Vertex v) const;
  /// Vertices with positive weight.
  Simplex support() const;
  std::string to_string() const;  // "1:1/4,2:3/4"

  bool operator==(const BarycentricPoint& other) const { return weights_ == other.weights_; }

 private:
  RationalVector weights_;
};

/// A simplex sigma with a proper nonempty face tau and the opposite face tau'.
struct RetractionProblem {
  Simplex sigma;
  Simplex tau;
  Simplex tau_prime;

  /// Throws MalformedInput unless tau is a proper nonempty face of sigma.
  RetractionProblem(Simplex sigma, Simplex tau);
};

/// Weight -1/k on each vertex of tau and +1/l on each vertex of tau'.
RationalVector retraction_direction(const RetractionProblem& r);

/// p + t * direction, without any validity check on the result.
RationalVector translate(const RetractionProblem& r, const BarycentricPoint& p, const mpq_class& t);

/// m * k, where m is the least weight of p on tau and k = |tau|.
mpq_class retraction_time(const RetractionProblem& r, const BarycentricPoint& p);

/// Moves p along the direction until some tau weight reaches 0. Throws
/// ContractViolation if p is not supported on sigma.
BarycentricPoint retract_point(const RetractionProblem& r, const BarycentricPoint& p);

}  // namespace ncpark
