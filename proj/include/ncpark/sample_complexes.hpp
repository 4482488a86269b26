#pragma once

#include "ncpark/simplicial_complex.hpp"

namespace ncpark {

struct CenteredComplex {
  SimplicialComplex complex;
  Simplex rho;
};

/// A patch of the triangular tiling around a central triangle rho = {0,1,2}:
/// rho, its three neighbours across edges, and the triangles meeting rho in a
/// single vertex. 12 vertices, 24 edges, 13 triangles.
CenteredComplex triangular_patch();

}  // namespace ncpark
