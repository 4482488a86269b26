#pragma once

#include <cstddef>
#include <string>

#include "ncpark/errors.hpp"

namespace ncpark {

// Caps on exhaustive enumerations. The counts grow like (n+1)^(n-1), so the
// defaults keep every enumeration well under a second of work.
struct EnumerationLimits {
  int nc_max = 8;           // NC_n elements
  int chains_max = 6;       // maximal chains of NC_{n+1}, i.e. PF_n
  int trees_max = 8;        // noncrossing trees on n vertices
  int hypertrees_max = 8;   // hypertrees on n vertices / dissections of the 2n-gon
  int pf_max = 8;           // parking functions of length n
  std::size_t max_faces = 2'000'000;

  static EnumerationLimits unlimited() {
    return {1000, 1000, 1000, 1000, 1000, static_cast<std::size_t>(-1)};
  }
};

inline void require_within(int n, int cap, const std::string& what) {
  if (n > cap) {
    throw ResourceLimit(what + ": n=" + std::to_string(n) +
                        " exceeds the configured cap " + std::to_string(cap));
  }
}

}  // namespace ncpark
