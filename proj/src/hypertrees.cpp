#include "ncpark/hypertrees.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <tuple>

#include "ncpark/errors.hpp"
#include "ncpark/text_format.hpp"

namespace ncpark {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n + 1) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
};

// Greedy subsequence test for the pattern x y x y over the merged vertex
// list; a shared vertex may play either role.
bool has_alternation(const std::vector<int>& merged, const Hyperedge& x, const Hyperedge& y) {
  int stage = 0;
  for (int v : merged) {
    const Hyperedge& want = stage % 2 == 0 ? x : y;
    if (std::binary_search(want.begin(), want.end(), v) && ++stage == 4) return true;
  }
  return false;
}

std::vector<Hyperedge> canonical(std::vector<Hyperedge> edges) {
  for (auto& h : edges) std::sort(h.begin(), h.end());
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace

bool hulls_weakly_noncrossing(const Hyperedge& x0, const Hyperedge& y0) {
  Hyperedge x = x0, y = y0;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  Hyperedge shared;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(shared));
  if (shared.size() > 1) return false;
  std::vector<int> merged;
  std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(merged));
  return !has_alternation(merged, x, y) && !has_alternation(merged, y, x);
}

bool is_noncrossing_hypertree(int n, const std::vector<Hyperedge>& hyperedges) {
  if (n < 1) return false;
  int excess = 0;
  UnionFind uf(n);
  for (const auto& h : hyperedges) {
    if (h.size() < 2) return false;
    auto sorted = h;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    if (sorted.front() < 1 || sorted.back() > n) return false;
    excess += static_cast<int>(h.size()) - 1;
    for (int v : sorted) uf.parent[uf.find(v)] = uf.find(sorted.front());
  }
  if (excess != n - 1) return false;
  for (int v = 1; v <= n; ++v)
    if (uf.find(v) != uf.find(1)) return false;
  for (std::size_t i = 0; i < hyperedges.size(); ++i)
    for (std::size_t j = i + 1; j < hyperedges.size(); ++j)
      if (!hulls_weakly_noncrossing(hyperedges[i], hyperedges[j])) return false;
  return true;
}

NoncrossingHypertree::NoncrossingHypertree(int n, std::vector<Hyperedge> hyperedges)
    : n_(n), hyperedges_(canonical(std::move(hyperedges))) {
  if (!is_noncrossing_hypertree(n_, hyperedges_)) throw MalformedInput(to_string() + " is not a noncrossing hypertree");
}

NoncrossingHypertree NoncrossingHypertree::from_tree(const NoncrossingTree& t) {
  std::vector<Hyperedge> edges;
  for (const auto& c : t.edges()) edges.push_back({c.a, c.b});
  return NoncrossingHypertree(t.n(), std::move(edges));
}

NoncrossingHypertree NoncrossingHypertree::full(int n) {
  Hyperedge all(n);
  std::iota(all.begin(), all.end(), 1);
  return NoncrossingHypertree(n, {all});
}

NoncrossingHypertree NoncrossingHypertree::parse(int n, std::string_view text) {
  return NoncrossingHypertree(n, parse_delimited_groups(text, '{', '}'));
}

bool NoncrossingHypertree::is_tree() const {
  return std::all_of(hyperedges_.begin(), hyperedges_.end(), [](const auto& h) { return h.size() == 2; });
}

std::string NoncrossingHypertree::to_string() const {
  std::string out;
  for (const auto& h : hyperedges_) out += "{" + join_ints(h, ",") + "}";
  return out;
}

bool hypertree_refines(const NoncrossingHypertree& lower, const NoncrossingHypertree& upper) {
  if (lower.n() != upper.n()) throw ContractViolation("hypertrees on different vertex counts");
  return std::all_of(lower.hyperedges().begin(), lower.hyperedges().end(), [&](const Hyperedge& h) {
    return std::any_of(upper.hyperedges().begin(), upper.hyperedges().end(), [&](const Hyperedge& g) {
      return std::includes(g.begin(), g.end(), h.begin(), h.end());
    });
  });
}

std::vector<std::vector<int>> dissection_cells(int m, const std::vector<Chord>& diagonals) {
  std::vector<std::vector<int>> cells(1);
  cells[0].resize(m);
  std::iota(cells[0].begin(), cells[0].end(), 1);
  for (const auto& d : diagonals) {
    auto holder = std::find_if(cells.begin(), cells.end(), [&](const std::vector<int>& c) {
      return std::binary_search(c.begin(), c.end(), d.a) && std::binary_search(c.begin(), c.end(), d.b);
    });
    if (holder == cells.end()) throw MalformedInput("diagonal " + d.to_string() + " crosses another diagonal");
    const auto& c = *holder;
    auto ia = std::lower_bound(c.begin(), c.end(), d.a) - c.begin();
    auto ib = std::lower_bound(c.begin(), c.end(), d.b) - c.begin();
    std::vector<int> inner(c.begin() + ia, c.begin() + ib + 1);
    std::vector<int> outer(c.begin(), c.begin() + ia + 1);
    outer.insert(outer.end(), c.begin() + ib, c.end());
    *holder = std::move(inner);
    cells.push_back(std::move(outer));
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

EvenDissection::EvenDissection(int m, std::vector<Chord> diagonals) : m_(m), diagonals_(std::move(diagonals)) {
  std::sort(diagonals_.begin(), diagonals_.end());
  if (m < 4 || m % 2 != 0) throw MalformedInput("even dissections live on an m-gon with even m >= 4");
  if (std::adjacent_find(diagonals_.begin(), diagonals_.end()) != diagonals_.end())
    throw MalformedInput("repeated diagonal");
  for (const auto& d : diagonals_) {
    if (d.b > m) throw MalformedInput("diagonal " + d.to_string() + " out of range");
    if (d.is_boundary(m)) throw MalformedInput(d.to_string() + " is a boundary edge, not a diagonal");
  }
  for (std::size_t i = 0; i < diagonals_.size(); ++i)
    for (std::size_t j = i + 1; j < diagonals_.size(); ++j)
      if (!weakly_noncrossing(diagonals_[i], diagonals_[j]))
        throw MalformedInput("diagonals " + diagonals_[i].to_string() + " and " + diagonals_[j].to_string() + " cross");
  cells_ = dissection_cells(m_, diagonals_);
  for (const auto& c : cells_)
    if (c.size() % 2 != 0) throw MalformedInput("dissection " + to_string() + " has an odd cell");
}

EvenDissection EvenDissection::parse(std::string_view text) {
  if (text.substr(0, 2) != "m=") throw MalformedInput("dissection text must start with m=");
  auto colon = text.find(':');
  if (colon == std::string_view::npos || text.size() < colon + 3 || text[colon + 1] != '[' || text.back() != ']')
    throw MalformedInput("dissection text must look like m=8:[1-4]");
  int m = parse_int_list(text.substr(2, colon - 2)).at(0);
  auto body = text.substr(colon + 2, text.size() - colon - 3);
  std::vector<Chord> diagonals;
  if (!body.empty()) {
    std::size_t start = 0;
    while (true) {
      auto comma = body.find(',', start);
      auto ends = parse_int_list(body.substr(start, comma == std::string_view::npos ? comma : comma - start), '-');
      if (ends.size() != 2) throw MalformedInput("diagonal must be written a-b");
      diagonals.emplace_back(ends[0], ends[1]);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  return EvenDissection(m, std::move(diagonals));
}

std::string EvenDissection::to_string() const {
  std::string out = "m=" + std::to_string(m_) + ":[";
  for (std::size_t i = 0; i < diagonals_.size(); ++i) out += (i ? "," : "") + diagonals_[i].to_string();
  return out + "]";
}

NoncrossingHypertree dissection_to_hypertree(const EvenDissection& d) {
  std::vector<Hyperedge> edges;
  for (const auto& cell : d.cells()) {
    Hyperedge h;
    for (int p : cell)
      if (p % 2 == 1) h.push_back((p + 1) / 2);
    edges.push_back(std::move(h));
  }
  try {
    return NoncrossingHypertree(d.m() / 2, std::move(edges));
  } catch (const MalformedInput& e) {
    throw InternalError("dissection " + d.to_string() + " maps to a non-hypertree: " + e.what());
  }
}

std::vector<EvenDissection> enumerate_even_dissections(int n, const EnumerationLimits& limits) {
  if (n < 2) throw ContractViolation("even dissections need n >= 2");
  require_within(n, limits.hypertrees_max, "even dissection enumeration");
  const int m = 2 * n;
  std::vector<Chord> candidates;
  for (int a = 1; a <= m; ++a)
    for (int b = a + 3; b <= m; b += 2) {
      Chord c(a, b);
      if (!c.is_boundary(m)) candidates.push_back(c);
    }
  std::vector<EvenDissection> out;
  std::vector<Chord> chosen;
  std::function<void(std::size_t)> search = [&](std::size_t next) {
    out.emplace_back(m, chosen);
    for (std::size_t i = next; i < candidates.size(); ++i) {
      const Chord& c = candidates[i];
      if (!std::all_of(chosen.begin(), chosen.end(), [&](const Chord& d) { return weakly_noncrossing(c, d); })) continue;
      chosen.push_back(c);
      search(i + 1);
      chosen.pop_back();
    }
  };
  search(0);
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return std::pair(x.diagonals().size(), x.diagonals()) < std::pair(y.diagonals().size(), y.diagonals());
  });
  return out;
}

std::vector<NoncrossingHypertree> enumerate_hypertrees_direct(int n, const EnumerationLimits& limits) {
  if (n < 2) throw ContractViolation("hypertrees need n >= 2");
  require_within(n, limits.hypertrees_max, "hypertree enumeration");
  std::vector<Hyperedge> candidates;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    if (std::popcount(mask) < 2) continue;
    Hyperedge h;
    for (int v = 0; v < n; ++v)
      if ((mask >> v) & 1U) h.push_back(v + 1);
    candidates.push_back(std::move(h));
  }
  std::sort(candidates.begin(), candidates.end());

  std::vector<NoncrossingHypertree> out;
  std::vector<Hyperedge> chosen;
  std::function<void(std::size_t, int)> search = [&](std::size_t next, int excess) {
    if (excess == n - 1) {
      out.emplace_back(n, chosen);
      return;
    }
    UnionFind uf(n);
    for (const auto& h : chosen)
      for (int v : h) uf.parent[uf.find(v)] = uf.find(h.front());
    for (std::size_t i = next; i < candidates.size(); ++i) {
      const Hyperedge& h = candidates[i];
      int grow = static_cast<int>(h.size()) - 1;
      if (excess + grow > n - 1) continue;
      // each vertex of h must lie in a different component, or h closes a hypercycle
      std::vector<int> roots;
      for (int v : h) roots.push_back(uf.find(v));
      std::sort(roots.begin(), roots.end());
      if (std::adjacent_find(roots.begin(), roots.end()) != roots.end()) continue;
      if (!std::all_of(chosen.begin(), chosen.end(),
                       [&](const Hyperedge& g) { return hulls_weakly_noncrossing(g, h); }))
        continue;
      chosen.push_back(h);
      search(i + 1, excess + grow);
      chosen.pop_back();
    }
  };
  search(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NoncrossingHypertree> enumerate_hypertrees_via_dissections(int n, const EnumerationLimits& limits) {
  std::vector<NoncrossingHypertree> out;
  for (const auto& d : enumerate_even_dissections(n, limits)) out.push_back(dissection_to_hypertree(d));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NoncrossingHypertree> enumerate_hypertrees(int n, const EnumerationLimits& limits) {
  auto direct = enumerate_hypertrees_direct(n, limits);
  auto via = enumerate_hypertrees_via_dissections(n, limits);
  if (direct != via) {
    throw InternalError("hypertree enumeration routes disagree for n=" + std::to_string(n) + ": " +
                        std::to_string(direct.size()) + " direct vs " + std::to_string(via.size()) + " via dissections");
  }
  return direct;
}

HypertreeDissectionBijection::HypertreeDissectionBijection(int n, const EnumerationLimits& limits)
    : n_(n), dissections_(enumerate_even_dissections(n, limits)) {
  for (std::size_t i = 0; i < dissections_.size(); ++i) {
    images_.push_back(dissection_to_hypertree(dissections_[i]));
    if (!index_.emplace(images_.back(), i).second) {
      throw InternalError("two dissections map to hypertree " + images_.back().to_string());
    }
  }
  if (index_.size() != enumerate_hypertrees_direct(n, limits).size()) {
    throw InternalError("dissections do not reach every hypertree for n=" + std::to_string(n));
  }
}

const EvenDissection& HypertreeDissectionBijection::to_dissection(const NoncrossingHypertree& h) const {
  auto it = index_.find(h);
  if (it == index_.end()) throw InternalError("no dissection for hypertree " + h.to_string());
  return dissections_[it->second];
}

const NoncrossingHypertree& HypertreeDissectionBijection::to_hypertree(const EvenDissection& d) const {
  auto it = std::lower_bound(dissections_.begin(), dissections_.end(), d, [](const auto& x, const auto& y) {
    return std::pair(x.diagonals().size(), x.diagonals()) < std::pair(y.diagonals().size(), y.diagonals());
  });
  if (it == dissections_.end() || *it != d) throw ContractViolation("dissection " + d.to_string() + " not on this polygon");
  return images_[it - dissections_.begin()];
}

EvenDissection hypertree_to_dissection(const NoncrossingHypertree& h, const EnumerationLimits& limits) {
  return HypertreeDissectionBijection(h.n(), limits).to_dissection(h);
}

}  // namespace ncpark
