#include "ncpark/simplicial_complex.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <unordered_set>

#include "ncpark/errors.hpp"
#include "ncpark/text_format.hpp"

namespace ncpark {

std::string Vertex::to_string() const {
  return ns() == 0 ? std::to_string(local()) : std::to_string(ns()) + ":" + std::to_string(local());
}

Vertex Vertex::parse(std::string_view text) {
  auto number = [&](std::string_view t) {
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
      throw MalformedInput("bad vertex '" + std::string(text) + "'");
    return v;
  };
  auto colon = text.find(':');
  if (colon == std::string_view::npos) return Vertex(number(text));
  return tagged(number(text.substr(0, colon)), number(text.substr(colon + 1)));
}

Simplex::Simplex(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw MalformedInput("a simplex needs at least one vertex");
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw MalformedInput("simplex has a repeated vertex");
}

Simplex::Simplex(std::initializer_list<std::uint32_t> locals) {
  std::vector<Vertex> vs;
  for (auto v : locals) vs.emplace_back(v);
  *this = Simplex(std::move(vs));
}

Simplex Simplex::parse(std::string_view text) {
  std::vector<Vertex> vs;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    vs.push_back(Vertex::parse(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Simplex(std::move(vs));
}

bool Simplex::contains(Vertex v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

bool Simplex::is_face_of(const Simplex& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(), vertices_.end());
}

bool Simplex::meets(const Simplex& other) const {
  auto a = vertices_.begin();
  auto b = other.vertices_.begin();
  while (a != vertices_.end() && b != other.vertices_.end()) {
    if (*a == *b) return true;
    if (*a < *b) ++a;
    else ++b;
  }
  return false;
}

Simplex Simplex::without(std::size_t position) const {
  std::vector<Vertex> vs;
  vs.reserve(vertices_.size() - 1);
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (i != position) vs.push_back(vertices_[i]);
  return Simplex(std::move(vs), Trusted{});
}

std::string Simplex::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < vertices_.size(); ++i) out += (i ? "," : "") + vertices_[i].to_string();
  return out;
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (auto v : s.vertices()) {
    h ^= v.key() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

SimplicialComplex SimplicialComplex::from_sorted_unique(std::vector<Simplex> faces) {
  SimplicialComplex x;
  x.faces_ = std::move(faces);
  x.index_.reserve(x.faces_.size() * 2);
  for (std::size_t i = 0; i < x.faces_.size(); ++i) x.index_.emplace(x.faces_[i], i);
  std::vector<char> maximal(x.faces_.size(), 1);
  for (const auto& f : x.faces_) {
    if (f.size() < 2) continue;
    for (std::size_t p = 0; p < f.size(); ++p) {
      auto it = x.index_.find(f.without(p));
      if (it == x.index_.end()) throw MalformedInput("face set is not closed under taking faces at " + f.to_string());
      maximal[it->second] = 0;
    }
  }
  for (std::size_t i = 0; i < x.faces_.size(); ++i)
    if (maximal[i]) x.maximal_.push_back(x.faces_[i]);
  std::sort(x.maximal_.begin(), x.maximal_.end());
  return x;
}

SimplicialComplex SimplicialComplex::from_maximal_faces(const std::vector<Simplex>& generators) {
  std::unordered_set<Simplex, SimplexHash> seen;
  for (const auto& g : generators) {
    const auto& vs = g.vertices();
    if (vs.size() > 20) throw ResourceLimit("simplex of dimension > 19 is beyond desk scale");
    const std::uint32_t count = 1U << vs.size();
    for (std::uint32_t mask = 1; mask < count; ++mask) {
      std::vector<Vertex> sub;
      for (std::size_t i = 0; i < vs.size(); ++i)
        if ((mask >> i) & 1U) sub.push_back(vs[i]);
      seen.insert(Simplex(std::move(sub), Simplex::Trusted{}));
    }
  }
  std::vector<Simplex> faces(seen.begin(), seen.end());
  std::sort(faces.begin(), faces.end(), canonical_less);
  return from_sorted_unique(std::move(faces));
}

SimplicialComplex SimplicialComplex::from_faces(std::vector<Simplex> faces) {
  std::sort(faces.begin(), faces.end(), canonical_less);
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  return from_sorted_unique(std::move(faces));
}

SimplicialComplex SimplicialComplex::full_simplex(const Simplex& s) { return from_maximal_faces({s}); }

SimplicialComplex SimplicialComplex::simplex_boundary(int k) {
  if (k < 2) throw ContractViolation("a simplex boundary needs at least 2 vertices");
  std::vector<Vertex> all;
  for (int v = 1; v <= k; ++v) all.emplace_back(static_cast<std::uint32_t>(v));
  Simplex whole(all);
  std::vector<Simplex> facets;
  for (int p = 0; p < k; ++p) facets.push_back(whole.without(static_cast<std::size_t>(p)));
  return from_maximal_faces(facets);
}

SimplicialComplex SimplicialComplex::parse(std::string_view text) {
  std::vector<Simplex> gens;
  std::size_t start = 0;
  while (start < text.size()) {
    auto nl = text.find('\n', start);
    auto line = text.substr(start, nl == std::string_view::npos ? nl : nl - start);
    if (!line.empty()) gens.push_back(Simplex::parse(line));
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  return from_maximal_faces(gens);
}

long SimplicialComplex::index_of(const Simplex& s) const {
  auto it = index_.find(s);
  return it == index_.end() ? -1 : static_cast<long>(it->second);
}

std::vector<Vertex> SimplicialComplex::vertices() const {
  std::vector<Vertex> out;
  for (const auto& f : faces_) {
    if (f.size() != 1) break;
    out.push_back(f.vertices().front());
  }
  return out;
}

std::size_t SimplicialComplex::vertex_count() const {
  std::size_t count = 0;
  while (count < faces_.size() && faces_[count].size() == 1) ++count;
  return count;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f(static_cast<std::size_t>(dimension() + 1), 0);
  for (const auto& s : faces_) ++f[s.size() - 1];
  return f;
}

std::vector<std::size_t> SimplicialComplex::faces_of_dimension(int d) const {
  std::vector<std::size_t> ids;
  for (std::size_t i = 0; i < faces_.size(); ++i)
    if (faces_[i].dimension() == d) ids.push_back(i);
  return ids;
}

SimplicialComplex SimplicialComplex::skeleton(int k) const {
  return subcomplex([k](const Simplex& s) { return s.dimension() <= k; });
}

SimplicialComplex SimplicialComplex::subcomplex(const std::function<bool(const Simplex&)>& keep) const {
  std::vector<Simplex> kept;
  for (const auto& f : faces_)
    if (keep(f)) kept.push_back(f);
  return from_sorted_unique(std::move(kept));
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
  return std::all_of(faces_.begin(), faces_.end(), [&](const Simplex& f) { return other.contains(f); });
}

bool SimplicialComplex::is_connected() const {
  auto verts = vertices();
  if (verts.empty()) return false;
  std::vector<std::size_t> parent(verts.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  auto pos = [&](Vertex v) { return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin()); };
  for (const auto& f : faces_) {
    if (f.size() != 2) continue;
    parent[find(pos(f.vertices()[0]))] = find(pos(f.vertices()[1]));
  }
  for (std::size_t v = 1; v < verts.size(); ++v)
    if (find(v) != find(0)) return false;
  return true;
}

std::string SimplicialComplex::to_string() const {
  std::string out;
  for (const auto& m : maximal_) out += m.to_string() + "\n";
  return out;
}

std::uint64_t SimplicialComplex::content_hash() const { return fnv1a64(to_string()); }

SimplicialComplex star(const SimplicialComplex& x, const Simplex& rho) {
  if (!x.contains(rho)) throw ContractViolation("simplex " + rho.to_string() + " is not a face of the complex");
  std::vector<Simplex> gens;
  for (const auto& m : x.maximal_faces())
    if (m.meets(rho)) gens.push_back(m);
  return SimplicialComplex::from_maximal_faces(gens);
}

SimplicialComplex link(const SimplicialComplex& x, const Simplex& rho) {
  return star(x, rho).subcomplex([&](const Simplex& f) { return !f.meets(rho); });
}

namespace {

using Adjacency = std::vector<std::vector<char>>;

void bron_kerbosch(const Adjacency& adj, std::vector<std::size_t>& r, std::vector<std::size_t> p,
                   std::vector<std::size_t> x, const std::function<bool(const std::vector<std::size_t>&)>& visit,
                   bool& stop) {
  if (stop) return;
  if (p.empty() && x.empty()) {
    if (!visit(r)) stop = true;
    return;
  }
  std::size_t pivot = !p.empty() ? p.front() : x.front();
  auto candidates = p;
  for (std::size_t v : candidates) {
    if (adj[pivot][v]) continue;
    std::vector<std::size_t> np, nx;
    for (auto w : p)
      if (adj[v][w]) np.push_back(w);
    for (auto w : x)
      if (adj[v][w]) nx.push_back(w);
    r.push_back(v);
    bron_kerbosch(adj, r, np, nx, visit, stop);
    r.pop_back();
    if (stop) return;
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

}  // namespace

bool is_flag(const SimplicialComplex& x) {
  auto verts = x.vertices();
  const std::size_t n = verts.size();
  Adjacency adj(n, std::vector<char>(n, 0));
  auto pos = [&](Vertex v) { return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin()); };
  for (const auto& f : x.faces()) {
    if (f.size() != 2) continue;
    auto a = pos(f.vertices()[0]), b = pos(f.vertices()[1]);
    adj[a][b] = adj[b][a] = 1;
  }
  std::vector<std::size_t> r, p(n);
  std::iota(p.begin(), p.end(), 0);
  bool stop = false;
  bool flag = true;
  bron_kerbosch(adj, r, p, {}, [&](const std::vector<std::size_t>& clique) {
    std::vector<Vertex> vs;
    for (auto i : clique) vs.push_back(verts[i]);
    if (!x.contains(Simplex(vs))) flag = false;
    return flag;
  }, stop);
  return flag;
}

Simplex max_connecting_simplex(const SimplicialComplex& x, const Simplex& rho, const Simplex& tau) {
  if (!x.contains(rho)) throw ContractViolation("rho " + rho.to_string() + " is not a face");
  if (!x.contains(tau) || tau.meets(rho)) throw ContractViolation("tau " + tau.to_string() + " is not in the link of rho");
  bool in_star = std::any_of(x.maximal_faces().begin(), x.maximal_faces().end(),
                             [&](const Simplex& m) { return m.meets(rho) && tau.is_face_of(m); });
  if (!in_star) throw ContractViolation("tau " + tau.to_string() + " is not in the link of rho");
  std::vector<Vertex> vs = tau.vertices();
  for (Vertex r : rho.vertices()) {
    bool adjacent = std::all_of(tau.vertices().begin(), tau.vertices().end(),
                                [&](Vertex t) { return x.contains(Simplex(std::vector<Vertex>{r, t})); });
    if (adjacent) vs.push_back(r);
  }
  Simplex sigma(std::move(vs));
  if (!x.contains(sigma)) {
    throw ContractViolation("vertex set " + sigma.to_string() + " spans a clique but no face: complex is not flag");
  }
  return sigma;
}

Filtration natural_filtration(const SimplicialComplex& x, const Simplex& rho) {
  Filtration f;
  f.center = rho;
  f.star = star(x, rho);
  f.link = f.star.subcomplex([&](const Simplex& s) { return !s.meets(rho); });
  auto outside = [&](const Simplex& s) {
    std::size_t count = 0;
    for (Vertex v : s.vertices())
      if (!rho.contains(v)) ++count;
    return count;
  };
  for (int k = -1; k <= f.link.dimension(); ++k) {
    std::size_t allowed = static_cast<std::size_t>(k + 1);
    f.stages.push_back(f.star.subcomplex([&](const Simplex& s) { return outside(s) <= allowed; }));
  }
  return f;
}

SimplicialComplex simplicial_join(const SimplicialComplex& x1, const SimplicialComplex& x2) {
  auto retag = [](const SimplicialComplex& x, std::uint32_t ns) {
    auto verts = x.vertices();
    std::vector<std::vector<Vertex>> out;
    for (const auto& f : x.faces()) {
      std::vector<Vertex> vs;
      for (Vertex v : f.vertices()) {
        auto i = std::lower_bound(verts.begin(), verts.end(), v) - verts.begin();
        vs.push_back(Vertex::tagged(ns, static_cast<std::uint32_t>(i)));
      }
      out.push_back(std::move(vs));
    }
    out.emplace_back();  // the empty face
    return out;
  };
  auto left = retag(x1, 1);
  auto right = retag(x2, 2);
  std::vector<Simplex> faces;
  faces.reserve(left.size() * right.size());
  for (const auto& a : left)
    for (const auto& b : right) {
      if (a.empty() && b.empty()) continue;
      std::vector<Vertex> vs = a;
      vs.insert(vs.end(), b.begin(), b.end());
      faces.emplace_back(std::move(vs));
    }
  return SimplicialComplex::from_faces(std::move(faces));
}

SimplicialComplex suspension(const SimplicialComplex& x) {
  auto sphere0 = SimplicialComplex::from_maximal_faces({Simplex{0}, Simplex{1}});
  return simplicial_join(x, sphere0);
}

}  // namespace ncpark
