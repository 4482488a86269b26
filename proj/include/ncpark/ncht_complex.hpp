#pragma once

#include <vector>

#include "ncpark/hypertrees.hpp"
#include "ncpark/limits.hpp"
#include "ncpark/simplicial_complex.hpp"
#include "ncpark/trees.hpp"

namespace ncpark {

/// The noncrossing hypertree complex on n vertices, realized on the 2n-gon.
/// Vertex v (1-based) is the diagonal diagonals[v - 1]; a vertex set is a
/// face iff its diagonals form a nonempty even dissection.
class NchtComplex {
 public:
  explicit NchtComplex(int n, const EnumerationLimits& limits = {});

  int n() const { return n_; }
  const SimplicialComplex& complex() const { return complex_; }
  const std::vector<Chord>& diagonals() const { return diagonals_; }
  const HypertreeDissectionBijection& correspondence() const { return bijection_; }

  Vertex vertex_of(const Chord& diagonal) const;
  Simplex face_of(const EvenDissection& d) const;
  /// Throws ContractViolation for the full hyperedge (no diagonals).
  Simplex face_of(const NoncrossingHypertree& h) const;
  Simplex face_of(const NoncrossingTree& t) const { return face_of(NoncrossingHypertree::from_tree(t)); }
  EvenDissection dissection_of(const Simplex& face) const;
  NoncrossingHypertree label_of(const Simplex& face) const;

 private:
  int n_;
  HypertreeDissectionBijection bijection_;
  std::vector<Chord> diagonals_;
  SimplicialComplex complex_;
};

/// Boundary edge of the n-gon by name: "bottom" is (n-1, n), "top" is (1, n),
/// otherwise "a-b" with consecutive labels or {1, n}.
Chord parse_boundary_edge(int n, std::string_view text);

/// The face of T_e, the tree of all boundary edges other than e.
Simplex t_e_face(const NchtComplex& x, const Chord& e);

/// Closure of the maximal faces whose tree label omits e.
SimplicialComplex unused_edge_subcomplex(const NchtComplex& x, const Chord& e);

}  // namespace ncpark
