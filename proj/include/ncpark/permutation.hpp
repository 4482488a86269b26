#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ncpark {

class Permutation;

/// A transposition (i j) with 1 <= i < j.
struct Transposition {
  int i = 1;
  int j = 2;

  Transposition() = default;
  /// Accepts the endpoints in either order; throws MalformedInput when equal or < 1.
  Transposition(int a, int b);

  Permutation as_permutation(int n) const;
  std::string to_string() const;  // "(1,3)"

  auto operator<=>(const Transposition&) const = default;
};

/// A bijection on {1..n}, stored as its image sequence.
///
/// Products are read left to right: in `a * b` the permutation `a` acts
/// first, so (a * b)(x) = b(a(x)). Reading the covering labels of a maximal
/// chain of NC_{n+1} bottom-to-top under this convention multiplies to the
/// boundary cycle (1,2,...,n+1).
class Permutation {
 public:
  Permutation() = default;
  /// `images[v-1]` is the image of v. Throws MalformedInput if not a bijection.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// The n-cycle (1,2,...,n).
  static Permutation boundary_cycle(int n);
  /// Product of disjoint cycles given as vertex lists.
  static Permutation from_cycles(int n, std::span<const std::vector<int>> cycles);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int v) const { return images_[v - 1]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  /// Non-trivial cycles, each starting at its minimum, sorted by minimum.
  std::vector<std::vector<int>> cycles() const;
  /// The transposition this permutation equals, if it is one.
  std::optional<Transposition> as_transposition() const;

  /// Cycle notation, e.g. "(1,2,3)(4,5)"; the identity prints as "()".
  std::string to_string() const;

  friend Permutation operator*(const Permutation& first, const Permutation& then);
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

/// Left-to-right product of transpositions on {1..n}.
Permutation multiply_left_to_right(int n, std::span<const Transposition> factors);

/// A factorization of the (n+1)-cycle into n transpositions.
class Factorization {
 public:
  Factorization() = default;
  /// Throws MalformedInput unless the factors multiply to boundary_cycle(n+1).
  explicit Factorization(std::vector<Transposition> factors);

  /// Number of factors n; the factors act on {1..n+1}.
  int length() const { return static_cast<int>(factors_.size()); }
  const std::vector<Transposition>& factors() const { return factors_; }

  std::string to_string() const;  // "(1,2)(1,3)"
  static Factorization parse(std::string_view text);

  auto operator<=>(const Factorization&) const = default;

 private:
  std::vector<Transposition> factors_;
};

}  // namespace ncpark
