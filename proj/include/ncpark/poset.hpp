#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ncpark {

/// Dense square bit matrix; row r is a bitset over columns.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  std::size_t size() const { return n_; }
  bool test(std::size_t r, std::size_t c) const { return (row(r)[c / 64] >> (c % 64)) & 1U; }
  void set(std::size_t r, std::size_t c) { row(r)[c / 64] |= std::uint64_t{1} << (c % 64); }
  const std::uint64_t* row(std::size_t r) const { return bits_.data() + r * words_; }
  std::uint64_t* row(std::size_t r) { return bits_.data() + r * words_; }
  std::size_t words() const { return words_; }
  std::size_t row_count(std::size_t r) const;
  /// |row(a) AND row(b)|
  std::size_t and_count(std::size_t a, std::size_t b) const;
  std::size_t and_count(std::size_t a, const BitMatrix& other, std::size_t b) const;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// A finite poset on elements 0..size()-1 with optional text labels.
///
/// Stores the full order relation in both directions plus Hasse covers.
class Poset {
 public:
  Poset() = default;

  /// Builds from an order predicate; throws MalformedInput when it is not a
  /// partial order.
  static Poset from_leq(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& leq,
                        std::vector<std::string> labels = {});
  /// Builds the reachability order of a directed acyclic graph (edges a -> b
  /// mean a < b). Throws MalformedInput on a directed cycle.
  static Poset from_digraph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                            std::vector<std::string> labels = {});

  std::size_t size() const { return n_; }
  bool leq(std::size_t a, std::size_t b) const { return up_.test(a, b); }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
  bool comparable(std::size_t a, std::size_t b) const { return leq(a, b) || leq(b, a); }
  bool covers(std::size_t lower, std::size_t upper) const;

  const std::vector<std::size_t>& upper_covers(std::size_t a) const { return upper_covers_[a]; }
  const std::vector<std::size_t>& lower_covers(std::size_t a) const { return lower_covers_[a]; }
  std::size_t cover_count() const;
  const std::string& label(std::size_t a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Bits of {b : a <= b}.
  const BitMatrix& up_sets() const { return up_; }
  /// Bits of {b : b <= a}.
  const BitMatrix& down_sets() const { return down_; }

  std::optional<std::size_t> bottom() const;
  std::optional<std::size_t> top() const;
  bool is_bounded() const { return bottom() && top(); }

  /// Rank function when every maximal chain has the same length and every
  /// cover raises rank by one; nullopt otherwise.
  std::optional<std::vector<int>> rank_function() const;
  bool is_graded() const { return rank_function().has_value(); }

  std::optional<std::size_t> meet(std::size_t a, std::size_t b) const;
  std::optional<std::size_t> join(std::size_t a, std::size_t b) const;
  /// Exhaustive check that all pairwise meets and joins exist.
  bool is_lattice() const;

  /// All maximal chains, each listed bottom to top (DFS over upper covers,
  /// covers visited in increasing element order).
  std::vector<std::vector<std::size_t>> maximal_chains() const;

  /// The sub-poset induced on `keep` (indices into this poset), in that order.
  Poset induced(const std::vector<std::size_t>& keep) const;

 private:
  void finish();

  std::size_t n_ = 0;
  BitMatrix up_;
  BitMatrix down_;
  std::vector<std::vector<std::size_t>> upper_covers_;
  std::vector<std::vector<std::size_t>> lower_covers_;
  std::vector<std::string> labels_;
};

/// The subset lattice of an l-element set; element i is the bitmask i.
Poset boolean_lattice(int l);

/// Componentwise product; element (a, b) has index a * q.size() + b.
Poset poset_product(const Poset& p, const Poset& q);

/// Exact isomorphism search. Returns phi with phi[a] the image of a, verified
/// to preserve and reflect the order, or nullopt when none exists.
std::optional<std::vector<std::size_t>> poset_isomorphic(const Poset& p, const Poset& q);

/// True when phi is a bijection with a <= b iff phi[a] <= phi[b].
bool is_order_isomorphism(const Poset& p, const Poset& q, const std::vector<std::size_t>& phi);

}  // namespace ncpark
