#include "ncpark/poset_complexes.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "ncpark/errors.hpp"

namespace ncpark {

namespace {

// Chains of p restricted to `allowed`, each listed once in increasing order.
SimplicialComplex chains_complex(const Poset& p, const std::vector<char>& allowed, const EnumerationLimits& limits) {
  std::vector<Simplex> faces;
  std::vector<Vertex> chain;
  std::function<void(std::size_t)> extend = [&](std::size_t last) {
    for (std::size_t b = 0; b < p.size(); ++b) {
      if (!allowed[b] || !p.less(last, b)) continue;
      chain.emplace_back(static_cast<std::uint32_t>(b));
      faces.emplace_back(chain);
      if (faces.size() > limits.max_faces) throw ResourceLimit("order complex exceeds the face cap");
      extend(b);
      chain.pop_back();
    }
  };
  for (std::size_t a = 0; a < p.size(); ++a) {
    if (!allowed[a]) continue;
    chain.assign(1, Vertex(static_cast<std::uint32_t>(a)));
    faces.emplace_back(chain);
    extend(a);
  }
  return SimplicialComplex::from_faces(std::move(faces));
}

}  // namespace

SimplicialComplex order_complex(const Poset& p, const EnumerationLimits& limits) {
  return chains_complex(p, std::vector<char>(p.size(), 1), limits);
}

SimplicialComplex bounded_link(const Poset& p, const EnumerationLimits& limits) {
  auto lo = p.bottom();
  auto hi = p.top();
  if (!lo || !hi) throw ContractViolation("bounded_link needs a poset with a minimum and a maximum");
  std::vector<char> allowed(p.size(), 1);
  allowed[*lo] = 0;
  allowed[*hi] = 0;
  return chains_complex(p, allowed, limits);
}

Factorization link_face_factorization(const NcLattice& lattice, const Simplex& face) {
  std::vector<std::size_t> chain{lattice.bottom()};
  for (Vertex v : face.vertices()) chain.push_back(v.local());
  chain.push_back(lattice.top());
  std::sort(chain.begin(), chain.end(), [&](auto a, auto b) {
    return lattice.elements[a].rank() < lattice.elements[b].rank();
  });
  std::vector<Transposition> factors;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    auto label = chain_label(lattice.elements[chain[i]], lattice.elements[chain[i + 1]]);
    auto t = label.as_transposition();
    if (!t) throw ContractViolation("face " + face.to_string() + " is not a maximal face of the link");
    factors.push_back(*t);
  }
  return Factorization(std::move(factors));
}

ParkingPoset parking_poset(const std::vector<ParkingFunction>& a, const StanleyBijection& stanley) {
  if (a.empty()) throw ContractViolation("Poset(A) needs a nonempty set of parking functions");
  ParkingPoset pp;
  pp.n = stanley.n();
  pp.members = a;
  std::sort(pp.members.begin(), pp.members.end());
  pp.members.erase(std::unique(pp.members.begin(), pp.members.end()), pp.members.end());

  std::set<std::size_t> used;
  for (const auto& pf : pp.members) {
    if (pf.length() != pp.n) throw ContractViolation("parking function " + pf.to_string() + " has the wrong length");
    for (auto e : stanley.chain_for(pf).elements) used.insert(e);
  }
  pp.lattice_index.assign(used.begin(), used.end());
  auto local = [&](std::size_t e) {
    return static_cast<std::size_t>(std::lower_bound(pp.lattice_index.begin(), pp.lattice_index.end(), e) -
                                    pp.lattice_index.begin());
  };
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& pf : pp.members) {
    std::vector<std::size_t> chain;
    for (auto e : stanley.chain_for(pf).elements) chain.push_back(local(e));
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) edges.emplace(chain[i], chain[i + 1]);
    pp.chains.push_back(std::move(chain));
  }
  std::vector<std::string> labels;
  for (auto e : pp.lattice_index) labels.push_back(stanley.lattice().elements[e].to_string());
  pp.poset = Poset::from_digraph(pp.lattice_index.size(), {edges.begin(), edges.end()}, std::move(labels));
  return pp;
}

ParkingPoset parking_poset(const std::vector<ParkingFunction>& a, int n, const EnumerationLimits& limits) {
  return parking_poset(a, StanleyBijection(n, limits));
}

bool reachability_matches_restriction(const ParkingPoset& pp, const NcLattice& lattice) {
  const auto& idx = pp.lattice_index;
  for (std::size_t x = 0; x < idx.size(); ++x)
    for (std::size_t y = 0; y < idx.size(); ++y)
      if (pp.poset.leq(x, y) != lattice.poset.leq(idx[x], idx[y])) return false;
  return true;
}

}  // namespace ncpark
