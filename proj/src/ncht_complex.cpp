#include "ncpark/ncht_complex.hpp"

#include <algorithm>

#include "ncpark/errors.hpp"
#include "ncpark/text_format.hpp"

namespace ncpark {

NchtComplex::NchtComplex(int n, const EnumerationLimits& limits) : n_(n), bijection_(n, limits) {
  for (const auto& d : bijection_.dissections())
    if (d.diagonals().size() == 1) diagonals_.push_back(d.diagonals().front());
  std::sort(diagonals_.begin(), diagonals_.end());

  std::vector<Simplex> faces;
  for (const auto& d : bijection_.dissections()) {
    if (d.diagonals().empty()) continue;
    faces.push_back(face_of(d));
    if (faces.size() > limits.max_faces) throw ResourceLimit("hypertree complex exceeds the face cap");
  }
  complex_ = SimplicialComplex::from_faces(std::move(faces));
}

Vertex NchtComplex::vertex_of(const Chord& diagonal) const {
  auto it = std::lower_bound(diagonals_.begin(), diagonals_.end(), diagonal);
  if (it == diagonals_.end() || *it != diagonal)
    throw ContractViolation("chord " + diagonal.to_string() + " is not a vertex of the hypertree complex");
  return Vertex(static_cast<std::uint32_t>(it - diagonals_.begin() + 1));
}

Simplex NchtComplex::face_of(const EvenDissection& d) const {
  if (d.m() != 2 * n_) throw ContractViolation("dissection lives on the wrong polygon");
  std::vector<Vertex> vs;
  for (const auto& c : d.diagonals()) vs.push_back(vertex_of(c));
  return Simplex(std::move(vs));
}

Simplex NchtComplex::face_of(const NoncrossingHypertree& h) const {
  const auto& d = bijection_.to_dissection(h);
  if (d.diagonals().empty()) throw ContractViolation("the full hyperedge is not a face of the hypertree complex");
  return face_of(d);
}

EvenDissection NchtComplex::dissection_of(const Simplex& face) const {
  std::vector<Chord> chords;
  for (Vertex v : face.vertices()) {
    if (v.ns() != 0 || v.local() < 1 || v.local() > diagonals_.size())
      throw ContractViolation("vertex " + v.to_string() + " is not a vertex of the hypertree complex");
    chords.push_back(diagonals_[v.local() - 1]);
  }
  return EvenDissection(2 * n_, std::move(chords));
}

NoncrossingHypertree NchtComplex::label_of(const Simplex& face) const {
  return bijection_.to_hypertree(dissection_of(face));
}

Chord parse_boundary_edge(int n, std::string_view text) {
  if (n < 3) throw MalformedInput("boundary edges need n >= 3");
  if (text == "bottom") return Chord(n - 1, n);
  if (text == "top") return Chord(1, n);
  auto ends = parse_int_list(text, '-');
  if (ends.size() != 2) throw MalformedInput("boundary edge must look like a-b");
  Chord c(ends[0], ends[1]);
  if (c.b > n || !c.is_boundary(n))
    throw MalformedInput("edge " + c.to_string() + " is not a boundary edge of the " + std::to_string(n) + "-gon");
  return c;
}

Simplex t_e_face(const NchtComplex& x, const Chord& e) {
  return x.face_of(NoncrossingTree::boundary_path_without(x.n(), e));
}

SimplicialComplex unused_edge_subcomplex(const NchtComplex& x, const Chord& e) {
  std::vector<Simplex> generators;
  for (const auto& t : enumerate_noncrossing_trees(x.n(), EnumerationLimits::unlimited()))
    if (!t.contains(e)) generators.push_back(x.face_of(t));
  return SimplicialComplex::from_maximal_faces(generators);
}

}  // namespace ncpark
