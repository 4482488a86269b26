#include "ncpark/sample_complexes.hpp"

#include <array>
#include <map>
#include <utility>

namespace ncpark {

CenteredComplex triangular_patch() {
  // Lattice coordinates (a, b); unit triangles are "up" (a,b),(a+1,b),(a,b+1)
  // and "down" (a+1,b),(a,b+1),(a+1,b+1).
  const std::array<std::pair<int, int>, 12> coords{{{-1, 1}, {0, 1}, {-1, 2}, {-1, 0}, {0, 0}, {1, 0},
                                                    {1, 1}, {0, 2}, {-1, 3}, {-2, 3}, {-2, 2}, {-2, 1}}};
  std::map<std::pair<int, int>, std::uint32_t> id;
  for (std::uint32_t v = 0; v < coords.size(); ++v) id[coords[v]] = v;
  auto at = [&](int a, int b) -> const std::uint32_t* {
    auto it = id.find({a, b});
    return it == id.end() ? nullptr : &it->second;
  };
  std::vector<Simplex> triangles;
  for (int a = -3; a <= 2; ++a)
    for (int b = -1; b <= 4; ++b) {
      for (auto tri : {std::array<std::pair<int, int>, 3>{{{a, b}, {a + 1, b}, {a, b + 1}}},
                       std::array<std::pair<int, int>, 3>{{{a + 1, b}, {a, b + 1}, {a + 1, b + 1}}}}) {
        std::vector<Vertex> vs;
        for (auto [x, y] : tri)
          if (auto v = at(x, y)) vs.emplace_back(*v);
        if (vs.size() == 3) triangles.emplace_back(std::move(vs));
      }
    }
  return {SimplicialComplex::from_maximal_faces(triangles), Simplex{0, 1, 2}};
}

}  // namespace ncpark
