#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "ncpark/limits.hpp"
#include "ncpark/simplicial_complex.hpp"

namespace ncpark {

/// A sparse integer matrix in coordinate form.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  struct Entry {
    std::size_t row;
    std::size_t col;
    std::int64_t value;
  };
  std::vector<Entry> entries;
};

/// Rank and the invariant factors greater than 1, in divisibility order.
struct SmithInvariants {
  std::size_t rank = 0;
  std::vector<mpz_class> torsion;
  bool used_big_integers = false;
};

/// Smith normal form invariants by sparse elimination with minimal-pivot
/// Euclid steps. Runs in checked 64-bit arithmetic and restarts with GMP
/// integers on overflow.
SmithInvariants smith_invariants(const IntMatrix& m);

/// Boundary map from d-faces to (d-1)-faces. Faces of each dimension are
/// indexed in canonical order; removing the vertex at position i carries sign
/// (-1)^i. For d = 0 this is the augmentation onto a single (-1)-cell.
IntMatrix boundary_matrix(const SimplicialComplex& x, int d);

/// Sum of (-1)^dim over all faces.
long euler_characteristic(const SimplicialComplex& x);

/// Reduced integral homology. Index d + 1 holds dimension d, from d = -1 up
/// to the dimension of the complex; the empty complex has H_{-1} = Z.
struct HomologyProfile {
  std::vector<std::size_t> betti;
  std::vector<std::vector<mpz_class>> torsion;
  std::vector<std::size_t> boundary_ranks;  // index d: rank of the d-th boundary map
  long euler_characteristic = 0;

  std::size_t betti_at(int d) const;
  const std::vector<mpz_class>& torsion_at(int d) const;
  /// All reduced groups vanish.
  bool is_trivial() const;
  /// Sum over d >= -1 of (-1)^d betti_d, which equals chi - 1.
  long alternating_betti_sum() const;
  /// One line per nonzero group, "H~1 = Z^5 + Z/2"; "trivial" when none.
  std::string to_string() const;
};

HomologyProfile reduced_homology(const SimplicialComplex& x, const EnumerationLimits& limits = {});

}  // namespace ncpark
