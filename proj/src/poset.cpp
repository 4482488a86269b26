#include "ncpark/poset.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <tuple>

#include "ncpark/errors.hpp"

namespace ncpark {

std::size_t BitMatrix::row_count(std::size_t r) const {
  std::size_t total = 0;
  for (std::size_t w = 0; w < words_; ++w) total += std::popcount(row(r)[w]);
  return total;
}

std::size_t BitMatrix::and_count(std::size_t a, std::size_t b) const { return and_count(a, *this, b); }

std::size_t BitMatrix::and_count(std::size_t a, const BitMatrix& other, std::size_t b) const {
  std::size_t total = 0;
  for (std::size_t w = 0; w < words_; ++w) total += std::popcount(row(a)[w] & other.row(b)[w]);
  return total;
}

Poset Poset::from_leq(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& leq,
                      std::vector<std::string> labels) {
  Poset p;
  p.n_ = n;
  p.up_ = BitMatrix(n);
  for (std::size_t a = 0; a < n; ++a) {
    if (!leq(a, a)) throw MalformedInput("order relation is not reflexive");
    for (std::size_t b = 0; b < n; ++b)
      if (leq(a, b)) p.up_.set(a, b);
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b)
      if (p.up_.test(a, b) && p.up_.test(b, a)) throw MalformedInput("order relation is not antisymmetric");
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!p.up_.test(a, b)) continue;
      // up(b) must be contained in up(a)
      for (std::size_t w = 0; w < p.up_.words(); ++w) {
        if (p.up_.row(b)[w] & ~p.up_.row(a)[w]) throw MalformedInput("order relation is not transitive");
      }
    }
  }
  p.labels_ = std::move(labels);
  p.finish();
  return p;
}

Poset Poset::from_digraph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                          std::vector<std::string> labels) {
  std::vector<std::vector<std::size_t>> out(n);
  std::vector<std::size_t> indegree(n, 0);
  for (auto [a, b] : edges) {
    if (a >= n || b >= n) throw MalformedInput("digraph edge out of range");
    out[a].push_back(b);
    ++indegree[b];
  }
  // Kahn order, then closure in reverse topological order.
  std::vector<std::size_t> order;
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (indegree[v] == 0) ready.push_back(v);
  while (!ready.empty()) {
    std::size_t v = ready.back();
    ready.pop_back();
    order.push_back(v);
    for (std::size_t w : out[v])
      if (--indegree[w] == 0) ready.push_back(w);
  }
  if (order.size() != n) throw MalformedInput("digraph has a directed cycle");

  Poset p;
  p.n_ = n;
  p.up_ = BitMatrix(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    std::size_t v = *it;
    p.up_.set(v, v);
    for (std::size_t w : out[v])
      for (std::size_t k = 0; k < p.up_.words(); ++k) p.up_.row(v)[k] |= p.up_.row(w)[k];
  }
  p.labels_ = std::move(labels);
  p.finish();
  return p;
}

void Poset::finish() {
  if (labels_.empty()) {
    labels_.resize(n_);
    for (std::size_t a = 0; a < n_; ++a) labels_[a] = std::to_string(a);
  }
  if (labels_.size() != n_) throw MalformedInput("label count does not match poset size");
  down_ = BitMatrix(n_);
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b)
      if (up_.test(a, b)) down_.set(b, a);
  upper_covers_.assign(n_, {});
  lower_covers_.assign(n_, {});
  // b covers a iff the interval [a, b] has exactly two elements.
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = 0; b < n_; ++b) {
      if (a == b || !up_.test(a, b)) continue;
      if (up_.and_count(a, down_, b) == 2) {
        upper_covers_[a].push_back(b);
        lower_covers_[b].push_back(a);
      }
    }
  }
}

bool Poset::covers(std::size_t lower, std::size_t upper) const {
  const auto& ups = upper_covers_[lower];
  return std::find(ups.begin(), ups.end(), upper) != ups.end();
}

std::size_t Poset::cover_count() const {
  std::size_t total = 0;
  for (const auto& c : upper_covers_) total += c.size();
  return total;
}

std::optional<std::size_t> Poset::bottom() const {
  for (std::size_t a = 0; a < n_; ++a)
    if (up_.row_count(a) == n_) return a;
  return std::nullopt;
}

std::optional<std::size_t> Poset::top() const {
  for (std::size_t a = 0; a < n_; ++a)
    if (down_.row_count(a) == n_) return a;
  return std::nullopt;
}

std::optional<std::vector<int>> Poset::rank_function() const {
  if (n_ == 0) return std::vector<int>{};
  // Longest chain from a minimal element, by increasing down-set size.
  std::vector<std::size_t> order(n_);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> below(n_);
  for (std::size_t a = 0; a < n_; ++a) below[a] = down_.row_count(a);
  std::sort(order.begin(), order.end(), [&](auto x, auto y) { return below[x] < below[y]; });
  std::vector<int> rank(n_, 0);
  for (std::size_t a : order)
    for (std::size_t c : lower_covers_[a]) rank[a] = std::max(rank[a], rank[c] + 1);
  int top_rank = -1;
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t c : lower_covers_[a])
      if (rank[a] != rank[c] + 1) return std::nullopt;
    if (upper_covers_[a].empty()) {
      if (top_rank >= 0 && rank[a] != top_rank) return std::nullopt;
      top_rank = rank[a];
    }
  }
  return rank;
}

std::optional<std::size_t> Poset::meet(std::size_t a, std::size_t b) const {
  // The greatest common lower bound: a lower bound whose down-set contains all others.
  std::vector<std::size_t> lower;
  for (std::size_t c = 0; c < n_; ++c)
    if (leq(c, a) && leq(c, b)) lower.push_back(c);
  for (std::size_t c : lower) {
    bool greatest = std::all_of(lower.begin(), lower.end(), [&](std::size_t d) { return leq(d, c); });
    if (greatest) return c;
  }
  return std::nullopt;
}

std::optional<std::size_t> Poset::join(std::size_t a, std::size_t b) const {
  std::vector<std::size_t> upper;
  for (std::size_t c = 0; c < n_; ++c)
    if (leq(a, c) && leq(b, c)) upper.push_back(c);
  for (std::size_t c : upper) {
    bool least = std::all_of(upper.begin(), upper.end(), [&](std::size_t d) { return leq(c, d); });
    if (least) return c;
  }
  return std::nullopt;
}

bool Poset::is_lattice() const {
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = a + 1; b < n_; ++b)
      if (!meet(a, b) || !join(a, b)) return false;
  return true;
}

std::vector<std::vector<std::size_t>> Poset::maximal_chains() const {
  std::vector<std::vector<std::size_t>> chains;
  std::vector<std::size_t> path;
  std::function<void(std::size_t)> walk = [&](std::size_t a) {
    path.push_back(a);
    if (upper_covers_[a].empty()) {
      chains.push_back(path);
    } else {
      for (std::size_t b : upper_covers_[a]) walk(b);
    }
    path.pop_back();
  };
  for (std::size_t a = 0; a < n_; ++a)
    if (lower_covers_[a].empty()) walk(a);
  return chains;
}

Poset Poset::induced(const std::vector<std::size_t>& keep) const {
  std::vector<std::string> labels;
  labels.reserve(keep.size());
  for (std::size_t a : keep) labels.push_back(labels_.at(a));
  return from_leq(keep.size(), [&](std::size_t x, std::size_t y) { return leq(keep[x], keep[y]); },
                  std::move(labels));
}

Poset boolean_lattice(int l) {
  if (l < 0 || l > 16) throw ContractViolation("boolean lattice rank must be in [0, 16]");
  std::size_t n = std::size_t{1} << l;
  std::vector<std::string> labels(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::string text = "{";
    bool first = true;
    for (int i = 0; i < l; ++i) {
      if (!((s >> i) & 1U)) continue;
      if (!first) text += ",";
      text += std::to_string(i + 1);
      first = false;
    }
    labels[s] = text + "}";
  }
  return Poset::from_leq(n, [](std::size_t a, std::size_t b) { return (a & ~b) == 0; }, std::move(labels));
}

Poset poset_product(const Poset& p, const Poset& q) {
  std::size_t m = q.size();
  std::vector<std::string> labels;
  labels.reserve(p.size() * m);
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < m; ++b) labels.push_back("(" + p.label(a) + "," + q.label(b) + ")");
  return Poset::from_leq(
      p.size() * m,
      [&](std::size_t x, std::size_t y) { return p.leq(x / m, y / m) && q.leq(x % m, y % m); },
      std::move(labels));
}

bool is_order_isomorphism(const Poset& p, const Poset& q, const std::vector<std::size_t>& phi) {
  if (p.size() != q.size() || phi.size() != p.size()) return false;
  std::vector<char> hit(q.size(), 0);
  for (std::size_t img : phi) {
    if (img >= q.size() || hit[img]) return false;
    hit[img] = 1;
  }
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      if (p.leq(a, b) != q.leq(phi[a], phi[b])) return false;
  return true;
}

namespace {

// Joint color refinement over the Hasse diagrams of both posets, so that equal
// colors are comparable across p and q.
std::pair<std::vector<int>, std::vector<int>> refine_colors(const Poset& p, const Poset& q) {
  using Signature = std::vector<long>;
  auto initial = [](const Poset& x, std::size_t a) {
    return Signature{static_cast<long>(x.lower_covers(a).size()), static_cast<long>(x.upper_covers(a).size()),
                     static_cast<long>(x.down_sets().row_count(a)), static_cast<long>(x.up_sets().row_count(a))};
  };
  std::vector<Signature> sp(p.size()), sq(q.size());
  for (std::size_t a = 0; a < p.size(); ++a) sp[a] = initial(p, a);
  for (std::size_t a = 0; a < q.size(); ++a) sq[a] = initial(q, a);

  std::vector<int> cp(p.size()), cq(q.size());
  std::size_t classes = 0;
  while (true) {
    std::map<Signature, int> ids;
    for (const auto& s : sp) ids.emplace(s, 0);
    for (const auto& s : sq) ids.emplace(s, 0);
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    for (std::size_t a = 0; a < p.size(); ++a) cp[a] = ids[sp[a]];
    for (std::size_t a = 0; a < q.size(); ++a) cq[a] = ids[sq[a]];
    if (ids.size() == classes) break;
    classes = ids.size();
    auto extend = [](const Poset& x, const std::vector<int>& colors, std::size_t a) {
      Signature sig{colors[a]};
      std::vector<long> ups, downs;
      for (auto b : x.upper_covers(a)) ups.push_back(colors[b]);
      for (auto b : x.lower_covers(a)) downs.push_back(colors[b]);
      std::sort(ups.begin(), ups.end());
      std::sort(downs.begin(), downs.end());
      sig.push_back(-1);
      sig.insert(sig.end(), ups.begin(), ups.end());
      sig.push_back(-2);
      sig.insert(sig.end(), downs.begin(), downs.end());
      return sig;
    };
    for (std::size_t a = 0; a < p.size(); ++a) sp[a] = extend(p, cp, a);
    for (std::size_t a = 0; a < q.size(); ++a) sq[a] = extend(q, cq, a);
  }
  return {cp, cq};
}

}  // namespace

std::optional<std::vector<std::size_t>> poset_isomorphic(const Poset& p, const Poset& q) {
  const std::size_t n = p.size();
  if (n != q.size() || p.cover_count() != q.cover_count()) return std::nullopt;
  if (n == 0) return std::vector<std::size_t>{};

  auto [cp, cq] = refine_colors(p, q);
  {
    auto sp = cp, sq = cq;
    std::sort(sp.begin(), sp.end());
    std::sort(sq.begin(), sq.end());
    if (sp != sq) return std::nullopt;
  }

  // Visit p in BFS order over the undirected Hasse graph so each new element
  // is adjacent to an already-mapped one whenever possible.
  std::vector<std::size_t> order;
  std::vector<char> queued(n, 0);
  const std::size_t color_count =
      static_cast<std::size_t>(std::max(*std::max_element(cp.begin(), cp.end()), *std::max_element(cq.begin(), cq.end()))) + 1;
  std::vector<std::size_t> class_size(color_count, 0);
  for (int c : cp) ++class_size[c];
  std::vector<std::size_t> seeds(n);
  std::iota(seeds.begin(), seeds.end(), 0);
  std::stable_sort(seeds.begin(), seeds.end(),
                   [&](auto a, auto b) { return class_size[cp[a]] < class_size[cp[b]]; });
  for (std::size_t seed : seeds) {
    if (queued[seed]) continue;
    std::size_t head = order.size();
    order.push_back(seed);
    queued[seed] = 1;
    while (head < order.size()) {
      std::size_t a = order[head++];
      for (const auto* nbrs : {&p.lower_covers(a), &p.upper_covers(a)})
        for (std::size_t b : *nbrs)
          if (!queued[b]) {
            queued[b] = 1;
            order.push_back(b);
          }
    }
  }

  std::vector<std::size_t> phi(n, n);
  std::vector<char> used(n, 0);
  std::vector<std::vector<std::size_t>> by_color(color_count);
  for (std::size_t b = 0; b < n; ++b) by_color[cq[b]].push_back(b);

  std::function<bool(std::size_t)> extend = [&](std::size_t depth) -> bool {
    if (depth == n) return true;
    std::size_t a = order[depth];
    for (std::size_t b : by_color[cp[a]]) {
      if (used[b]) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        std::size_t x = order[d];
        if (p.leq(x, a) != q.leq(phi[x], b) || p.leq(a, x) != q.leq(b, phi[x])) ok = false;
      }
      if (!ok) continue;
      phi[a] = b;
      used[b] = 1;
      if (extend(depth + 1)) return true;
      used[b] = 0;
      phi[a] = n;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  if (!is_order_isomorphism(p, q, phi)) throw InternalError("isomorphism search returned a non-isomorphism");
  return phi;
}

}  // namespace ncpark
