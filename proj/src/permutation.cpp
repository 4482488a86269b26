#include "ncpark/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "ncpark/errors.hpp"
#include "ncpark/text_format.hpp"

namespace ncpark {

Transposition::Transposition(int a, int b) : i(std::min(a, b)), j(std::max(a, b)) {
  if (a == b || i < 1) {
    throw MalformedInput("transposition needs two distinct positive labels");
  }
}

Permutation Transposition::as_permutation(int n) const {
  if (j > n) throw ContractViolation("transposition " + to_string() + " out of range");
  auto p = Permutation::identity(n).images();
  std::swap(p[i - 1], p[j - 1]);
  return Permutation(std::move(p));
}

std::string Transposition::to_string() const {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size() + 1, 0);
  for (int v : images_) {
    if (v < 1 || v > size() || seen[v]) throw MalformedInput("image sequence is not a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  return Permutation(std::move(p));
}

Permutation Permutation::boundary_cycle(int n) {
  std::vector<int> p(n);
  for (int v = 1; v <= n; ++v) p[v - 1] = v == n ? 1 : v + 1;
  return Permutation(std::move(p));
}

Permutation Permutation::from_cycles(int n, std::span<const std::vector<int>> cycles) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<char> used(n + 1, 0);
  for (const auto& cyc : cycles) {
    for (std::size_t t = 0; t < cyc.size(); ++t) {
      int v = cyc[t];
      if (v < 1 || v > n || used[v]) throw MalformedInput("cycles are not disjoint on {1..n}");
      used[v] = 1;
      p[v - 1] = cyc[(t + 1) % cyc.size()];
    }
  }
  return Permutation(std::move(p));
}

Permutation Permutation::inverse() const {
  std::vector<int> q(images_.size());
  for (int v = 1; v <= size(); ++v) q[images_[v - 1] - 1] = v;
  return Permutation(std::move(q));
}

bool Permutation::is_identity() const {
  for (int v = 1; v <= size(); ++v)
    if (images_[v - 1] != v) return false;
  return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(images_.size() + 1, 0);
  for (int v = 1; v <= size(); ++v) {
    if (seen[v] || images_[v - 1] == v) continue;
    std::vector<int> cyc;
    for (int w = v; !seen[w]; w = images_[w - 1]) {
      seen[w] = 1;
      cyc.push_back(w);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::optional<Transposition> Permutation::as_transposition() const {
  auto cyc = cycles();
  if (cyc.size() != 1 || cyc.front().size() != 2) return std::nullopt;
  return Transposition(cyc.front()[0], cyc.front()[1]);
}

std::string Permutation::to_string() const {
  auto cyc = cycles();
  if (cyc.empty()) return "()";
  std::string out;
  for (const auto& c : cyc) out += "(" + join_ints(c, ",") + ")";
  return out;
}

Permutation operator*(const Permutation& first, const Permutation& then) {
  if (first.size() != then.size()) throw ContractViolation("permutation sizes differ");
  std::vector<int> p(first.images_.size());
  for (int v = 1; v <= first.size(); ++v) p[v - 1] = then(first(v));
  return Permutation(std::move(p));
}

Permutation multiply_left_to_right(int n, std::span<const Transposition> factors) {
  // Track where each point goes as the factors act in sequence.
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  for (const auto& t : factors) {
    if (t.j > n) throw ContractViolation("transposition " + t.to_string() + " out of range");
    for (int& image : p) {
      if (image == t.i) image = t.j;
      else if (image == t.j) image = t.i;
    }
  }
  return Permutation(std::move(p));
}

Factorization::Factorization(std::vector<Transposition> factors) : factors_(std::move(factors)) {
  int n = length();
  if (n < 1) throw MalformedInput("a factorization needs at least one factor");
  if (multiply_left_to_right(n + 1, factors_) != Permutation::boundary_cycle(n + 1)) {
    throw MalformedInput("factors of " + to_string() + " do not multiply to the boundary cycle");
  }
}

std::string Factorization::to_string() const {
  std::string out;
  for (const auto& t : factors_) out += t.to_string();
  return out;
}

Factorization Factorization::parse(std::string_view text) {
  std::vector<Transposition> factors;
  for (const auto& group : parse_delimited_groups(text, '(', ')')) {
    if (group.size() != 2) throw MalformedInput("transposition must have two entries");
    factors.emplace_back(group[0], group[1]);
  }
  return Factorization(std::move(factors));
}

}  // namespace ncpark
