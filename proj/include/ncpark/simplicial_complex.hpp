#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ncpark {

/// Vertex identifier: a (namespace, local id) pair packed so that numeric
/// order is lexicographic order on the pair. Namespace 0 is the plain space.
class Vertex {
 public:
  constexpr Vertex() = default;
  constexpr explicit Vertex(std::uint32_t local) : key_(local) {}
  static constexpr Vertex tagged(std::uint32_t ns, std::uint32_t local) {
    Vertex v;
    v.key_ = (std::uint64_t{ns} << 32) | local;
    return v;
  }

  constexpr std::uint32_t ns() const { return static_cast<std::uint32_t>(key_ >> 32); }
  constexpr std::uint32_t local() const { return static_cast<std::uint32_t>(key_); }
  constexpr std::uint64_t key() const { return key_; }
  std::string to_string() const;  // "7" or "2:7"
  static Vertex parse(std::string_view text);

  auto operator<=>(const Vertex&) const = default;

 private:
  std::uint64_t key_ = 0;
};

/// A nonempty set of vertices, kept sorted.
class Simplex {
 public:
  Simplex() = default;
  /// Sorts; throws MalformedInput on an empty or repeated vertex list.
  explicit Simplex(std::vector<Vertex> vertices);
  Simplex(std::initializer_list<std::uint32_t> locals);
  static Simplex parse(std::string_view text);  // "1,2,3"

  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
  bool contains(Vertex v) const;
  bool is_face_of(const Simplex& other) const;
  bool meets(const Simplex& other) const;
  /// The facet obtained by deleting the vertex at `position` (size() >= 2).
  Simplex without(std::size_t position) const;
  std::string to_string() const;  // "1,2,3"

  auto operator<=>(const Simplex&) const = default;

 private:
  friend class SimplicialComplex;
  struct Trusted {};
  Simplex(std::vector<Vertex> sorted, Trusted) : vertices_(std::move(sorted)) {}
  std::vector<Vertex> vertices_;
};

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept;
};

/// Canonical face order: by size, then lexicographic.
inline bool canonical_less(const Simplex& a, const Simplex& b) {
  return a.size() != b.size() ? a.size() < b.size() : a < b;
}

/// A finite abstract simplicial complex with every face stored explicitly.
/// The empty complex (no faces) is allowed.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Downward closure of the given simplices.
  static SimplicialComplex from_maximal_faces(const std::vector<Simplex>& generators);
  /// Exactly these faces; throws MalformedInput if not closed under subsets.
  static SimplicialComplex from_faces(std::vector<Simplex> faces);
  /// The full simplex on the given vertices.
  static SimplicialComplex full_simplex(const Simplex& s);
  /// Boundary of the full simplex on vertices 1..k (k >= 2).
  static SimplicialComplex simplex_boundary(int k);
  static SimplicialComplex parse(std::string_view text);

  bool empty() const { return faces_.empty(); }
  std::size_t face_count() const { return faces_.size(); }
  const std::vector<Simplex>& faces() const { return faces_; }
  const Simplex& face(std::size_t id) const { return faces_[id]; }
  /// Index in faces(), or -1.
  long index_of(const Simplex& s) const;
  bool contains(const Simplex& s) const { return index_of(s) >= 0; }
  int dimension() const { return faces_.empty() ? -1 : faces_.back().dimension(); }
  std::vector<Vertex> vertices() const;
  std::size_t vertex_count() const;
  /// f-vector: f[d] = number of d-dimensional faces.
  std::vector<std::size_t> f_vector() const;
  /// Face ids of dimension d, in canonical order.
  std::vector<std::size_t> faces_of_dimension(int d) const;
  /// Maximal faces, sorted lexicographically.
  const std::vector<Simplex>& maximal_faces() const { return maximal_; }
  SimplicialComplex skeleton(int k) const;
  /// Faces satisfying the predicate; the predicate must select a subcomplex.
  SimplicialComplex subcomplex(const std::function<bool(const Simplex&)>& keep) const;
  bool is_subcomplex_of(const SimplicialComplex& other) const;
  bool is_connected() const;

  /// Sorted maximal faces, one per line.
  std::string to_string() const;
  std::uint64_t content_hash() const;

  bool operator==(const SimplicialComplex& other) const { return faces_ == other.faces_; }

 private:
  static SimplicialComplex from_sorted_unique(std::vector<Simplex> faces);

  std::vector<Simplex> faces_;  // canonical order
  std::unordered_map<Simplex, std::size_t, SimplexHash> index_;
  std::vector<Simplex> maximal_;
};

/// Star of rho: downward closure of every face meeting rho. Throws
/// ContractViolation if rho is not a face.
SimplicialComplex star(const SimplicialComplex& x, const Simplex& rho);
/// Faces of star(x, rho) disjoint from rho.
SimplicialComplex link(const SimplicialComplex& x, const Simplex& rho);

/// Every clique of the 1-skeleton spans a face.
bool is_flag(const SimplicialComplex& x);

/// Vertices of tau together with every vertex of rho adjacent to all of tau.
/// Throws ContractViolation if tau is not a face of link(x, rho) or if the
/// vertex set is not a face (x is not flag).
Simplex max_connecting_simplex(const SimplicialComplex& x, const Simplex& rho, const Simplex& tau);

/// The natural filtration S^(-1) ⊆ S^(0) ⊆ ... of star(x, rho):
/// S^(k) holds the star faces with at most k+1 vertices outside rho.
struct Filtration {
  Simplex center;
  SimplicialComplex star;
  SimplicialComplex link;
  std::vector<SimplicialComplex> stages;  // stages[k + 1] == S^(k)

  int top_index() const { return static_cast<int>(stages.size()) - 2; }
  const SimplicialComplex& stage(int k) const { return stages.at(static_cast<std::size_t>(k + 1)); }
};

Filtration natural_filtration(const SimplicialComplex& x, const Simplex& rho);

/// Faces of the join: f1 ∪ f2 with either part possibly empty but not both.
/// Vertices of x1 are retagged (1, i) and those of x2 (2, i), where i is the
/// vertex's position in the sorted vertex list of its complex.
SimplicialComplex simplicial_join(const SimplicialComplex& x1, const SimplicialComplex& x2);
/// Join with the 0-sphere.
SimplicialComplex suspension(const SimplicialComplex& x);

}  // namespace ncpark
