#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "ncpark/limits.hpp"
#include "ncpark/permutation.hpp"
#include "ncpark/poset.hpp"

namespace ncpark {

using BlockSet = std::vector<std::vector<int>>;

/// True iff `blocks` is noncrossing. Throws MalformedInput unless `blocks`
/// partitions {1..n} into nonempty blocks.
bool is_noncrossing_partition(const BlockSet& blocks, int n);

/// A noncrossing partition of the vertices 1..n of a convex n-gon, labeled in
/// clockwise-increasing order. Blocks are kept sorted, and sorted by minimum.
class NoncrossingPartition {
 public:
  NoncrossingPartition() = default;
  /// Throws MalformedInput if `blocks` is not a noncrossing partition of {1..n}.
  NoncrossingPartition(int n, BlockSet blocks);

  static NoncrossingPartition bottom(int n);  // all singletons
  static NoncrossingPartition top(int n);     // one block
  /// Reads the cycles of a noncrossing permutation back into blocks.
  static NoncrossingPartition from_permutation(const Permutation& perm);
  static NoncrossingPartition parse(int n, std::string_view text);

  int n() const { return n_; }
  const BlockSet& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  /// Rank in NC_n: n minus the number of blocks.
  int rank() const { return n_ - block_count(); }
  /// Every block of *this lies inside a block of `upper`.
  bool refines(const NoncrossingPartition& upper) const;

  /// Each block becomes a cycle traversing its labels in increasing order.
  Permutation to_permutation() const;
  std::string to_string() const;  // "{1,3}{2}{4}"

  auto operator<=>(const NoncrossingPartition&) const = default;

 private:
  int n_ = 0;
  BlockSet blocks_;
};

inline Permutation partition_to_permutation(const NoncrossingPartition& p) { return p.to_permutation(); }

/// All noncrossing partitions of {1..n}, generated recursively by choosing the
/// block of the smallest element and partitioning each gap independently.
std::vector<NoncrossingPartition> enumerate_noncrossing_partitions(int n);

/// NC_n ordered by refinement. Elements are sorted by (rank, blocks), so the
/// bottom is element 0 and the top is the last element.
struct NcLattice {
  int n = 0;
  std::vector<NoncrossingPartition> elements;
  Poset poset;

  std::size_t index_of(const NoncrossingPartition& p) const;
  std::size_t bottom() const { return 0; }
  std::size_t top() const { return elements.size() - 1; }
};

NcLattice enumerate_nc_lattice(int n, const EnumerationLimits& limits = {});

/// perm(lower)^{-1} * perm(upper) in the left-to-right convention, i.e. the
/// permutation that carries the lower element to the upper one. Throws
/// ContractViolation unless lower refines upper.
Permutation chain_label(const NoncrossingPartition& lower, const NoncrossingPartition& upper);

struct MaximalChain {
  std::vector<std::size_t> elements;  // lattice indices, bottom to top
  Factorization factorization;
};

/// Every maximal chain of NC_{n+1} together with its covering labels, sorted by
/// factorization. Throws ContractViolation unless `lattice` has n+1 >= 2.
std::vector<MaximalChain> maximal_chain_labels(const NcLattice& lattice, const EnumerationLimits& limits = {});
std::vector<Factorization> maximal_chains(const NcLattice& lattice, const EnumerationLimits& limits = {});

}  // namespace ncpark
