#pragma once

#include <vector>

#include "ncpark/limits.hpp"
#include "ncpark/noncrossing_partition.hpp"
#include "ncpark/parking.hpp"
#include "ncpark/poset.hpp"
#include "ncpark/simplicial_complex.hpp"

namespace ncpark {

/// Faces are the nonempty chains; vertex i is poset element i.
SimplicialComplex order_complex(const Poset& p, const EnumerationLimits& limits = {});

/// Order complex of p with its minimum and maximum removed. Vertex ids stay
/// the element indices of p. Throws ContractViolation if p is unbounded.
SimplicialComplex bounded_link(const Poset& p, const EnumerationLimits& limits = {});

/// The factorization carried by a maximal face of bounded_link(NC_{n+1}).
Factorization link_face_factorization(const NcLattice& lattice, const Simplex& face);

/// Poset(A): the union of the maximal chains of NC_{n+1} labeled by the
/// parking functions in A, ordered by reachability along those chains.
struct ParkingPoset {
  int n = 0;
  std::vector<ParkingFunction> members;
  std::vector<std::size_t> lattice_index;  // element i is lattice element lattice_index[i]
  std::vector<std::vector<std::size_t>> chains;  // one per member, in local indices
  Poset poset;
};

ParkingPoset parking_poset(const std::vector<ParkingFunction>& a, const StanleyBijection& stanley);
/// Convenience overload that builds the bijection table for n.
ParkingPoset parking_poset(const std::vector<ParkingFunction>& a, int n, const EnumerationLimits& limits = {});

/// Whether the reachability order of Poset(A) equals the refinement order of
/// NC_{n+1} restricted to the same elements.
bool reachability_matches_restriction(const ParkingPoset& pp, const NcLattice& lattice);

}  // namespace ncpark
