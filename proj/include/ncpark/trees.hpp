#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "ncpark/limits.hpp"
#include "ncpark/permutation.hpp"

namespace ncpark {

/// A chord (a, b), a < b, between two vertices of a labeled convex polygon.
struct Chord {
  int a = 1;
  int b = 2;

  Chord() = default;
  /// Accepts endpoints in either order; throws MalformedInput if equal or < 1.
  Chord(int x, int y);

  /// Boundary edge of the m-gon: consecutive labels, or (1, m).
  bool is_boundary(int m) const { return b - a == 1 || (a == 1 && b == m); }
  Transposition as_transposition() const { return {a, b}; }
  std::string to_string() const;  // "1-3"

  auto operator<=>(const Chord&) const = default;
};

/// False iff the endpoints strictly interleave (the chords cross).
bool weakly_noncrossing(const Chord& c1, const Chord& c2);

/// A noncrossing spanning tree of the labeled convex n-gon.
class NoncrossingTree {
 public:
  NoncrossingTree() = default;
  /// Throws MalformedInput unless the chords form a noncrossing spanning tree.
  NoncrossingTree(int n, std::vector<Chord> edges);
  static NoncrossingTree parse(int n, std::string_view text);  // "1-2,2-3,3-4"
  /// All boundary edges except `omitted`.
  static NoncrossingTree boundary_path_without(int n, const Chord& omitted);

  int n() const { return n_; }
  const std::vector<Chord>& edges() const { return edges_; }
  bool contains(const Chord& c) const;
  std::string to_string() const;

  auto operator<=>(const NoncrossingTree&) const = default;

 private:
  int n_ = 0;
  std::vector<Chord> edges_;  // sorted
};

/// All noncrossing trees on n >= 2 vertices, sorted.
std::vector<NoncrossingTree> enumerate_noncrossing_trees(int n, const EnumerationLimits& limits = {});

struct OrderedNoncrossingTree {
  NoncrossingTree tree;
  std::vector<Chord> order;  // each edge exactly once

  OrderedNoncrossingTree() = default;
  /// Throws MalformedInput unless `order` lists the edges of `tree` once each.
  OrderedNoncrossingTree(NoncrossingTree tree, std::vector<Chord> order);

  auto operator<=>(const OrderedNoncrossingTree&) const = default;
};

/// True iff the edge transpositions, multiplied left to right in the given
/// order, give the boundary cycle (1,2,...,n).
bool is_properly_ordered(const OrderedNoncrossingTree& t);

/// All proper orderings of t, sorted by edge sequence.
std::vector<OrderedNoncrossingTree> proper_orderings(const NoncrossingTree& t);

/// Reads the transpositions of a factorization of the (n+1)-cycle as chords.
/// Throws InternalError if they do not form a noncrossing tree.
OrderedNoncrossingTree factorization_to_tree(const Factorization& f);
/// Inverse direction; throws MalformedInput unless t is properly ordered.
Factorization tree_to_factorization(const OrderedNoncrossingTree& t);

}  // namespace ncpark
