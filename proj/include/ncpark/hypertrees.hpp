#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ncpark/limits.hpp"
#include "ncpark/trees.hpp"

namespace ncpark {

using Hyperedge = std::vector<int>;

/// Convex hulls of two vertex sets of a convex polygon are disjoint or meet
/// in a single common vertex.
bool hulls_weakly_noncrossing(const Hyperedge& x, const Hyperedge& y);

/// Pairwise weakly noncrossing hulls and a vertex/hyperedge incidence graph
/// that is a tree (connected with sum(|h| - 1) = n - 1).
bool is_noncrossing_hypertree(int n, const std::vector<Hyperedge>& hyperedges);

/// Hyperedges are sorted, and listed in lexicographic order.
class NoncrossingHypertree {
 public:
  NoncrossingHypertree() = default;
  /// Throws MalformedInput unless the hyperedges form a noncrossing hypertree.
  NoncrossingHypertree(int n, std::vector<Hyperedge> hyperedges);
  static NoncrossingHypertree from_tree(const NoncrossingTree& t);
  static NoncrossingHypertree full(int n);
  static NoncrossingHypertree parse(int n, std::string_view text);  // "{1,2,4,5}{1,7,8}"

  int n() const { return n_; }
  const std::vector<Hyperedge>& hyperedges() const { return hyperedges_; }
  std::size_t size() const { return hyperedges_.size(); }
  bool is_tree() const;
  std::string to_string() const;

  auto operator<=>(const NoncrossingHypertree&) const = default;

 private:
  int n_ = 0;
  std::vector<Hyperedge> hyperedges_;
};

/// Every hyperedge of `lower` lies inside some hyperedge of `upper`.
bool hypertree_refines(const NoncrossingHypertree& lower, const NoncrossingHypertree& upper);

/// A dissection of the m-gon (m = 2n) into even-sided cells. Hypertree vertex
/// i sits at polygon position 2i-1; position 2i is the white dot after it.
class EvenDissection {
 public:
  EvenDissection() = default;
  /// Throws MalformedInput on boundary edges, crossings, or odd cells.
  EvenDissection(int m, std::vector<Chord> diagonals);
  static EvenDissection parse(std::string_view text);  // "m=16:[1-12,3-6,9-12]"

  int m() const { return m_; }
  const std::vector<Chord>& diagonals() const { return diagonals_; }
  /// Cells as increasing vertex lists, sorted by (minimum vertex, lexicographic).
  const std::vector<std::vector<int>>& cells() const { return cells_; }
  std::string to_string() const;

  auto operator<=>(const EvenDissection& other) const {
    return std::tie(m_, diagonals_) <=> std::tie(other.m_, other.diagonals_);
  }
  bool operator==(const EvenDissection& other) const { return m_ == other.m_ && diagonals_ == other.diagonals_; }

 private:
  int m_ = 0;
  std::vector<Chord> diagonals_;  // sorted
  std::vector<std::vector<int>> cells_;
};

/// Cells of the m-gon cut by pairwise noncrossing diagonals.
std::vector<std::vector<int>> dissection_cells(int m, const std::vector<Chord>& diagonals);

/// Black vertices of each cell, relabeled to 1..n, one hyperedge per cell.
NoncrossingHypertree dissection_to_hypertree(const EvenDissection& d);

/// All even dissections of the 2n-gon (including the empty one), sorted by
/// (diagonal count, diagonals).
std::vector<EvenDissection> enumerate_even_dissections(int n, const EnumerationLimits& limits = {});

/// Direct search over hypergraphs on {1..n}, sorted.
std::vector<NoncrossingHypertree> enumerate_hypertrees_direct(int n, const EnumerationLimits& limits = {});
/// Images of all even dissections of the 2n-gon, sorted.
std::vector<NoncrossingHypertree> enumerate_hypertrees_via_dissections(int n, const EnumerationLimits& limits = {});
/// Runs both routes; throws InternalError if they disagree.
std::vector<NoncrossingHypertree> enumerate_hypertrees(int n, const EnumerationLimits& limits = {});

/// The hypertree/dissection correspondence on n vertices, realized by
/// inverting the constructive dissection -> hypertree map. Construction checks
/// that the map is injective and hits every hypertree.
class HypertreeDissectionBijection {
 public:
  explicit HypertreeDissectionBijection(int n, const EnumerationLimits& limits = {});

  int n() const { return n_; }
  const std::vector<EvenDissection>& dissections() const { return dissections_; }
  const EvenDissection& to_dissection(const NoncrossingHypertree& h) const;
  const NoncrossingHypertree& to_hypertree(const EvenDissection& d) const;

 private:
  int n_;
  std::vector<EvenDissection> dissections_;
  std::vector<NoncrossingHypertree> images_;
  std::map<NoncrossingHypertree, std::size_t> index_;
};

/// One-shot inverse; builds the full table for h.n().
EvenDissection hypertree_to_dissection(const NoncrossingHypertree& h, const EnumerationLimits& limits = {});

}  // namespace ncpark
