#include "ncpark/trees.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "ncpark/errors.hpp"
#include "ncpark/text_format.hpp"

namespace ncpark {

Chord::Chord(int x, int y) : a(std::min(x, y)), b(std::max(x, y)) {
  if (x == y || a < 1) throw MalformedInput("chord needs two distinct positive vertices");
}

std::string Chord::to_string() const { return std::to_string(a) + "-" + std::to_string(b); }

bool weakly_noncrossing(const Chord& c1, const Chord& c2) {
  bool interleave = (c1.a < c2.a && c2.a < c1.b && c1.b < c2.b) || (c2.a < c1.a && c1.a < c2.b && c2.b < c1.b);
  return !interleave;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n + 1) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[x] = y;
    return true;
  }
};

}  // namespace

NoncrossingTree::NoncrossingTree(int n, std::vector<Chord> edges) : n_(n), edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  if (n < 2 || static_cast<int>(edges_.size()) != n - 1) throw MalformedInput("a tree on n vertices has n-1 edges");
  UnionFind uf(n);
  for (const auto& e : edges_) {
    if (e.b > n) throw MalformedInput("edge " + e.to_string() + " out of range");
    if (!uf.unite(e.a, e.b)) throw MalformedInput("edges of " + to_string() + " contain a cycle");
  }
  for (std::size_t i = 0; i < edges_.size(); ++i)
    for (std::size_t j = i + 1; j < edges_.size(); ++j)
      if (!weakly_noncrossing(edges_[i], edges_[j])) throw MalformedInput("edges of " + to_string() + " cross");
}

NoncrossingTree NoncrossingTree::parse(int n, std::string_view text) {
  std::vector<Chord> edges;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    auto dash = token.find('-');
    if (dash == std::string_view::npos) throw MalformedInput("edge must be written a-b");
    auto ends = parse_int_list(token, '-');
    if (ends.size() != 2) throw MalformedInput("edge must be written a-b");
    edges.emplace_back(ends[0], ends[1]);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return NoncrossingTree(n, std::move(edges));
}

NoncrossingTree NoncrossingTree::boundary_path_without(int n, const Chord& omitted) {
  if (!omitted.is_boundary(n) || omitted.b > n) throw ContractViolation(omitted.to_string() + " is not a boundary edge");
  std::vector<Chord> edges;
  for (int v = 1; v < n; ++v)
    if (Chord(v, v + 1) != omitted) edges.emplace_back(v, v + 1);
  if (Chord(1, n) != omitted && n > 2) edges.emplace_back(1, n);
  return NoncrossingTree(n, std::move(edges));
}

bool NoncrossingTree::contains(const Chord& c) const { return std::binary_search(edges_.begin(), edges_.end(), c); }

std::string NoncrossingTree::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < edges_.size(); ++i) out += (i ? "," : "") + edges_[i].to_string();
  return out;
}

std::vector<NoncrossingTree> enumerate_noncrossing_trees(int n, const EnumerationLimits& limits) {
  if (n < 2) throw ContractViolation("noncrossing trees need n >= 2");
  require_within(n, limits.trees_max, "noncrossing tree enumeration");
  std::vector<Chord> chords;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) chords.emplace_back(a, b);

  std::vector<NoncrossingTree> out;
  std::vector<Chord> chosen;
  // Union-find state is rebuilt per node: n is tiny and this keeps the search
  // free of undo bookkeeping.
  std::function<void(std::size_t)> search = [&](std::size_t next) {
    if (static_cast<int>(chosen.size()) == n - 1) {
      out.emplace_back(n, chosen);
      return;
    }
    const std::size_t needed = n - 1 - chosen.size();
    for (std::size_t i = next; i + needed <= chords.size(); ++i) {
      const Chord& c = chords[i];
      bool ok = std::all_of(chosen.begin(), chosen.end(), [&](const Chord& d) { return weakly_noncrossing(c, d); });
      if (!ok) continue;
      UnionFind uf(n);
      for (const auto& d : chosen) uf.unite(d.a, d.b);
      if (uf.find(c.a) == uf.find(c.b)) continue;
      chosen.push_back(c);
      search(i + 1);
      chosen.pop_back();
    }
  };
  search(0);
  std::sort(out.begin(), out.end());
  return out;
}

OrderedNoncrossingTree::OrderedNoncrossingTree(NoncrossingTree t, std::vector<Chord> o)
    : tree(std::move(t)), order(std::move(o)) {
  auto sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != tree.edges()) throw MalformedInput("ordering does not list each tree edge once");
}

bool is_properly_ordered(const OrderedNoncrossingTree& t) {
  std::vector<Transposition> factors;
  for (const auto& c : t.order) factors.push_back(c.as_transposition());
  return multiply_left_to_right(t.tree.n(), factors) == Permutation::boundary_cycle(t.tree.n());
}

std::vector<OrderedNoncrossingTree> proper_orderings(const NoncrossingTree& t) {
  std::vector<OrderedNoncrossingTree> out;
  auto order = t.edges();
  do {
    OrderedNoncrossingTree candidate(t, order);
    if (is_properly_ordered(candidate)) out.push_back(std::move(candidate));
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

OrderedNoncrossingTree factorization_to_tree(const Factorization& f) {
  std::vector<Chord> order;
  for (const auto& t : f.factors()) order.emplace_back(t.i, t.j);
  try {
    NoncrossingTree tree(f.length() + 1, order);
    return OrderedNoncrossingTree(std::move(tree), std::move(order));
  } catch (const MalformedInput& e) {
    throw InternalError("factorization " + f.to_string() + " does not give a noncrossing tree: " + e.what());
  }
}

Factorization tree_to_factorization(const OrderedNoncrossingTree& t) {
  if (!is_properly_ordered(t)) throw MalformedInput("tree " + t.tree.to_string() + " is not properly ordered");
  std::vector<Transposition> factors;
  for (const auto& c : t.order) factors.push_back(c.as_transposition());
  return Factorization(std::move(factors));
}

}  // namespace ncpark
