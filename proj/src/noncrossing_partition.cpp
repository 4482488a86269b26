#include "ncpark/noncrossing_partition.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "ncpark/errors.hpp"
#include "ncpark/text_format.hpp"

namespace ncpark {

namespace {

void validate_partition(const BlockSet& blocks, int n) {
  if (n < 1) throw MalformedInput("n must be positive");
  std::vector<char> seen(n + 1, 0);
  int covered = 0;
  for (const auto& block : blocks) {
    if (block.empty()) throw MalformedInput("empty block");
    for (int v : block) {
      if (v < 1 || v > n) throw MalformedInput("block entry " + std::to_string(v) + " outside {1.." + std::to_string(n) + "}");
      if (seen[v]) throw MalformedInput("vertex " + std::to_string(v) + " appears twice");
      seen[v] = 1;
      ++covered;
    }
  }
  if (covered != n) throw MalformedInput("blocks do not cover {1.." + std::to_string(n) + "}");
}

// Two disjoint vertex sets cross iff the second does not fit into a single
// cyclic gap of the first.
bool blocks_cross(const std::vector<int>& a, const std::vector<int>& b) {
  auto gap = [&](int v) {
    auto pos = std::lower_bound(a.begin(), a.end(), v) - a.begin();
    return pos == static_cast<long>(a.size()) ? 0L : pos;
  };
  long g = gap(b.front());
  return std::any_of(b.begin(), b.end(), [&](int v) { return gap(v) != g; });
}

BlockSet canonical(BlockSet blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

}  // namespace

bool is_noncrossing_partition(const BlockSet& blocks, int n) {
  validate_partition(blocks, n);
  auto sorted = canonical(blocks);
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = i + 1; j < sorted.size(); ++j)
      if (blocks_cross(sorted[i], sorted[j])) return false;
  return true;
}

NoncrossingPartition::NoncrossingPartition(int n, BlockSet blocks) : n_(n), blocks_(canonical(std::move(blocks))) {
  if (!is_noncrossing_partition(blocks_, n_)) throw MalformedInput("partition " + to_string() + " is crossing");
}

NoncrossingPartition NoncrossingPartition::bottom(int n) {
  BlockSet blocks;
  for (int v = 1; v <= n; ++v) blocks.push_back({v});
  return NoncrossingPartition(n, std::move(blocks));
}

NoncrossingPartition NoncrossingPartition::top(int n) {
  std::vector<int> all(n);
  for (int v = 1; v <= n; ++v) all[v - 1] = v;
  return NoncrossingPartition(n, {all});
}

NoncrossingPartition NoncrossingPartition::from_permutation(const Permutation& perm) {
  BlockSet blocks;
  std::vector<char> seen(perm.size() + 1, 0);
  for (int v = 1; v <= perm.size(); ++v) {
    if (seen[v]) continue;
    std::vector<int> block;
    for (int w = v; !seen[w]; w = perm(w)) {
      seen[w] = 1;
      block.push_back(w);
    }
    blocks.push_back(std::move(block));
  }
  NoncrossingPartition p(perm.size(), std::move(blocks));
  if (p.to_permutation() != perm) throw MalformedInput("permutation " + perm.to_string() + " is not noncrossing");
  return p;
}

NoncrossingPartition NoncrossingPartition::parse(int n, std::string_view text) {
  return NoncrossingPartition(n, parse_delimited_groups(text, '{', '}'));
}

bool NoncrossingPartition::refines(const NoncrossingPartition& upper) const {
  if (upper.n_ != n_) throw ContractViolation("partitions of different sizes");
  std::vector<int> owner(n_ + 1);
  for (std::size_t b = 0; b < upper.blocks_.size(); ++b)
    for (int v : upper.blocks_[b]) owner[v] = static_cast<int>(b);
  for (const auto& block : blocks_)
    for (int v : block)
      if (owner[v] != owner[block.front()]) return false;
  return true;
}

Permutation NoncrossingPartition::to_permutation() const { return Permutation::from_cycles(n_, blocks_); }

std::string NoncrossingPartition::to_string() const {
  std::string out;
  for (const auto& b : blocks_) out += "{" + join_ints(b, ",") + "}";
  return out;
}

std::vector<NoncrossingPartition> enumerate_noncrossing_partitions(int n) {
  if (n < 1) throw ContractViolation("n must be at least 1");
  // Partitions of a sorted vertex list: pick the block of its first element,
  // then partition each gap between consecutive block members on its own.
  std::function<std::vector<BlockSet>(const std::vector<int>&)> partitions = [&](const std::vector<int>& verts) {
    std::vector<BlockSet> out;
    if (verts.empty()) {
      out.emplace_back();
      return out;
    }
    const std::size_t rest = verts.size() - 1;
    for (std::size_t mask = 0; mask < (std::size_t{1} << rest); ++mask) {
      std::vector<int> block{verts[0]};
      std::vector<std::vector<int>> gaps(1);
      for (std::size_t i = 0; i < rest; ++i) {
        if ((mask >> i) & 1U) {
          block.push_back(verts[i + 1]);
          gaps.emplace_back();
        } else {
          gaps.back().push_back(verts[i + 1]);
        }
      }
      std::vector<BlockSet> partial{{block}};
      for (const auto& gap : gaps) {
        auto sub = partitions(gap);
        std::vector<BlockSet> next;
        for (const auto& left : partial)
          for (const auto& right : sub) {
            BlockSet merged = left;
            merged.insert(merged.end(), right.begin(), right.end());
            next.push_back(std::move(merged));
          }
        partial = std::move(next);
      }
      out.insert(out.end(), partial.begin(), partial.end());
    }
    return out;
  };
  std::vector<int> all(n);
  for (int v = 1; v <= n; ++v) all[v - 1] = v;
  std::vector<NoncrossingPartition> result;
  for (auto& blocks : partitions(all)) result.emplace_back(n, std::move(blocks));
  std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
    return std::pair(a.rank(), a.blocks()) < std::pair(b.rank(), b.blocks());
  });
  return result;
}

std::size_t NcLattice::index_of(const NoncrossingPartition& p) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), p, [](const auto& a, const auto& b) {
    return std::pair(a.rank(), a.blocks()) < std::pair(b.rank(), b.blocks());
  });
  if (it == elements.end() || *it != p) throw ContractViolation("partition " + p.to_string() + " not in lattice");
  return static_cast<std::size_t>(it - elements.begin());
}

NcLattice enumerate_nc_lattice(int n, const EnumerationLimits& limits) {
  if (n < 1) throw ContractViolation("NC_n needs n >= 1");
  require_within(n, limits.nc_max, "noncrossing partition lattice");
  NcLattice lattice;
  lattice.n = n;
  lattice.elements = enumerate_noncrossing_partitions(n);
  std::vector<std::string> labels;
  for (const auto& p : lattice.elements) labels.push_back(p.to_string());
  const auto& els = lattice.elements;
  lattice.poset = Poset::from_leq(
      els.size(), [&](std::size_t a, std::size_t b) { return els[a].refines(els[b]); }, std::move(labels));
  return lattice;
}

Permutation chain_label(const NoncrossingPartition& lower, const NoncrossingPartition& upper) {
  if (!lower.refines(upper)) {
    throw ContractViolation(lower.to_string() + " does not refine " + upper.to_string());
  }
  return lower.to_permutation().inverse() * upper.to_permutation();
}

std::vector<MaximalChain> maximal_chain_labels(const NcLattice& lattice, const EnumerationLimits& limits) {
  if (lattice.n < 2) throw ContractViolation("maximal chains are taken in NC_{n+1} with n >= 1");
  require_within(lattice.n - 1, limits.chains_max, "maximal chain enumeration");
  std::vector<MaximalChain> chains;
  for (auto& path : lattice.poset.maximal_chains()) {
    std::vector<Transposition> factors;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      auto label = chain_label(lattice.elements[path[i]], lattice.elements[path[i + 1]]);
      auto t = label.as_transposition();
      if (!t) throw InternalError("covering label " + label.to_string() + " is not a transposition");
      factors.push_back(*t);
    }
    chains.push_back({std::move(path), Factorization(std::move(factors))});
  }
  std::sort(chains.begin(), chains.end(),
            [](const auto& a, const auto& b) { return a.factorization < b.factorization; });
  return chains;
}

std::vector<Factorization> maximal_chains(const NcLattice& lattice, const EnumerationLimits& limits) {
  std::vector<Factorization> out;
  for (auto& c : maximal_chain_labels(lattice, limits)) out.push_back(std::move(c.factorization));
  return out;
}

}  // namespace ncpark
