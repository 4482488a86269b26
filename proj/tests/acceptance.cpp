// One PASS/FAIL line per acceptance criterion; exit status 1 if any fail.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "ncpark/certify.hpp"
#include "ncpark/collapse.hpp"
#include "ncpark/homology.hpp"
#include "ncpark/hypertrees.hpp"
#include "ncpark/ncht_complex.hpp"
#include "ncpark/noncrossing_partition.hpp"
#include "ncpark/parking.hpp"
#include "ncpark/poset_complexes.hpp"
#include "ncpark/retraction.hpp"
#include "ncpark/sample_complexes.hpp"
#include "ncpark/trees.hpp"

using namespace ncpark;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

template <typename... Parts>
std::string cat(const Parts&... parts) {
  std::ostringstream s;
  (s << ... << parts);
  return s.str();
}

// Collapsible with a certificate that replays.
void expect_collapsible(const SimplicialComplex& x, const std::string& what) {
  auto report = certify_contractible(x);
  expect(report.tier == Tier::Collapsible, what + ": tier " + std::string(tier_name(report.tier)));
  expect(report.certificate && replay_certificate(x, *report.certificate).ok, what + ": certificate does not replay");
}

std::set<std::vector<int>> as_sets(const SimplicialComplex& x) {
  std::map<Vertex, int> id;
  for (auto v : x.vertices()) id.emplace(v, static_cast<int>(id.size()));
  std::set<std::vector<int>> out;
  for (const auto& f : x.faces()) {
    std::vector<int> s;
    for (auto v : f.vertices()) s.push_back(id.at(v));
    std::sort(s.begin(), s.end());
    out.insert(s);
  }
  return out;
}

std::string criterion1() {
  NchtComplex ncht(4);
  auto f = ncht.complex().f_vector();
  expect(f.size() == 2 && f[0] == 8 && f[1] == 12, "ncht(4) is not 8 vertices / 12 edges");
  auto link = bounded_link(enumerate_nc_lattice(4).poset);
  auto g = link.f_vector();
  expect(g.size() == 2 && g[0] == 12 && g[1] == 16, "NC_4 link is not 12 vertices / 16 edges");
  return "ncht(4): 8 vertices, 12 edges; NC_4 link: 12 vertices, 16 edges";
}

std::string criterion2() {
  for (int n = 1; n <= 5; ++n) {
    const long long expected = oracle::power(n + 1, n - 1);
    auto chains = maximal_chains(enumerate_nc_lattice(n + 1));
    auto pfs = enumerate_parking_functions(n);
    expect(static_cast<long long>(chains.size()) == expected, cat("chain count at n=", n));
    expect(static_cast<long long>(pfs.size()) == expected, cat("parking function count at n=", n));
    StanleyBijection stanley(n);
    std::set<ParkingFunction> image;
    for (const auto& f : chains) {
      auto pf = stanley_map(f);
      expect(is_parking_function(pf.entries()), "stanley image is not parking");
      expect(stanley.inverse(pf) == f, "stanley inverse round trip at " + f.to_string());
      image.insert(pf);
      auto tree = factorization_to_tree(f);
      expect(is_properly_ordered(tree), "tree not properly ordered for " + f.to_string());
      expect(tree_to_factorization(tree) == f, "tree round trip at " + f.to_string());
    }
    expect(static_cast<long long>(image.size()) == expected, cat("stanley map not injective at n=", n));
  }
  for (int n = 2; n <= 6; ++n) {
    auto direct = enumerate_hypertrees_direct(n);
    expect(direct == enumerate_hypertrees_via_dissections(n), cat("hypertree routes disagree at n=", n));
    HypertreeDissectionBijection table(n);
    for (const auto& h : direct) expect(table.to_hypertree(table.to_dissection(h)) == h, "hypertree round trip");
    for (const auto& d : table.dissections()) expect(table.to_dissection(table.to_hypertree(d)) == d, "dissection round trip");
  }
  return "n=1..5 chains = PF = (n+1)^(n-1), all round trips identities, hypertree routes agree";
}

std::string criterion3() {
  std::size_t certified = 0;
  for (int n = 4; n <= 6; ++n) {
    NchtComplex x(n);
    expect(is_flag(x.complex()), cat("ncht(", n, ") is not flag"));
    for (int a = 1; a <= n; ++a) {
      Chord e(a, a % n + 1);
      auto sub = unused_edge_subcomplex(x, e);
      expect(sub == star(x.complex(), t_e_face(x, e)), cat("n=", n, " e=", e.to_string(), ": subcomplex != star(T_e)"));
      expect_collapsible(sub, cat("n=", n, " e=", e.to_string()));
      ++certified;
    }
  }
  return cat(certified, " unused-edge subcomplexes (n=4..6, every boundary edge) equal star(T_e), flag, COLLAPSIBLE");
}

std::string criterion4() {
  for (int n = 3; n <= 5; ++n) {
    StanleyBijection stanley(n);
    auto pp = parking_poset(classify_pf(n).by_k.at(n), stanley);
    expect_collapsible(bounded_link(pp.poset), cat("PF_{", n, ",", n, "} link"));
  }
  return "links of Poset(PF_{n,n}) for n=3,4,5 COLLAPSIBLE";
}

std::string criterion5() {
  std::size_t instances = 0;
  for (int n = 3; n <= 5; ++n) {
    StanleyBijection stanley(n);
    auto classes = classify_pf(n);
    for (int k = 2; k < n; ++k) {
      auto big = parking_poset(classes.by_k.at(k), stanley);
      auto small = parking_poset(classify_pf(k).by_k.at(k), k);
      auto product = poset_product(small.poset, boolean_lattice(n - k));
      auto phi = poset_isomorphic(big.poset, product);
      expect(phi && is_order_isomorphism(big.poset, product, *phi), cat("no isomorphism at n=", n, " k=", k));
      expect_collapsible(bounded_link(big.poset), cat("PF_{", n, ",", k, "} link"));
      ++instances;
    }
  }
  return cat(instances, " instances: explicit isomorphisms to Poset(PF_{k,k}) x Bool_{n-k}, links COLLAPSIBLE");
}

std::string criterion6() {
  for (int k = 3; k <= 7; ++k) {
    auto sphere = SimplicialComplex::simplex_boundary(k);
    for (auto id : sphere.faces_of_dimension(1))
      expect(star(sphere, sphere.face(id)) == sphere, cat("star of an edge is not the whole boundary, k=", k));
    auto report = certify_contractible(sphere);
    expect(report.tier == Tier::NotHomologyPoint, cat("boundary of the ", k, "-vertex simplex: wrong tier"));
    const int top = k - 2;
    for (int d = -1; d <= top; ++d)
      expect(report.homology->betti_at(d) == (d == top ? 1u : 0u) && report.homology->torsion_at(d).empty(),
             cat("homology of the ", k, "-vertex boundary in degree ", d));
  }
  return "simplex boundaries on 3..7 vertices: edge stars are everything, NOT_HOMOLOGY_POINT, top H~ = Z";
}

std::string criterion7() {
  auto q = [](long a, long b) { return mpq_class(a, b); };
  RetractionProblem r4(Simplex{1, 2, 3, 4}, Simplex{1, 2});
  auto d4 = retraction_direction(r4);
  expect(d4 == RationalVector{{Vertex(1), q(-1, 2)}, {Vertex(2), q(-1, 2)}, {Vertex(3), q(1, 2)}, {Vertex(4), q(1, 2)}},
         "direction for a 2-face of a tetrahedron");
  RetractionProblem r31(Simplex{1, 2, 3, 4}, Simplex{1, 2, 3});
  expect(retraction_direction(r31) ==
             RationalVector{{Vertex(1), q(-1, 3)}, {Vertex(2), q(-1, 3)}, {Vertex(3), q(-1, 3)}, {Vertex(4), q(1, 1)}},
         "direction for a 3-face of a tetrahedron");
  expect(retract_point(r4, BarycentricPoint::barycenter(Simplex{1, 2, 3, 4})) ==
             BarycentricPoint({{Vertex(3), q(1, 2)}, {Vertex(4), q(1, 2)}}),
         "barycenter example");
  RetractionProblem r3(Simplex{1, 2, 3}, Simplex{1, 2});
  expect(retract_point(r3, BarycentricPoint({{Vertex(1), q(1, 2)}, {Vertex(2), q(1, 5)}, {Vertex(3), q(3, 10)}})) ==
             BarycentricPoint({{Vertex(1), q(3, 10)}, {Vertex(3), q(7, 10)}}),
         "triangle example");

  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 10000; ++trial) {
    const std::uint32_t size = 2 + static_cast<std::uint32_t>(rng() % 6);  // dimension 1..6
    std::vector<Vertex> sv, tv;
    for (std::uint32_t v = 1; v <= size; ++v) sv.emplace_back(v);
    while (tv.empty() || tv.size() == sv.size()) {
      tv.clear();
      for (auto v : sv)
        if (rng() % 2) tv.push_back(v);
    }
    RetractionProblem r{Simplex(sv), Simplex(tv)};
    RationalVector w;
    mpq_class total = 0;
    for (auto v : sv) {
      mpq_class x(static_cast<long>(rng() % 50) + (r.tau.contains(v) ? 1 : 0),
                  static_cast<long>(1 + rng() % 7));
      x.canonicalize();
      if (x > 0) w[v] = x, total += x;
    }
    for (auto& [v, x] : w) x /= total;
    BarycentricPoint p(w);
    auto image = retract_point(r, p);
    mpq_class sum = 0;
    for (const auto& [v, x] : image.weights()) {
      expect(x >= 0, "negative coordinate");
      expect(r.sigma.contains(v), "left sigma");
      sum += x;
    }
    expect(sum == 1, "coordinates do not sum to 1");
    expect(!r.tau.is_face_of(image.support()), "image meets the interior of the tau star");
    expect(retract_point(r, image) == image, "not idempotent");
    // Points already off tau's open star are fixed.
    RationalVector off = w;
    off.erase(tv[rng() % tv.size()]);
    if (!off.empty()) {
      mpq_class rest = 0;
      for (const auto& [v, x] : off) rest += x;
      for (auto& [v, x] : off) x /= rest;
      BarycentricPoint fixed(off);
      expect(retract_point(r, fixed) == fixed, "point of sigma minus tau moved");
    }
  }
  return "4 worked examples exact; 10000 random points in dimensions 1..6";
}

// Largest face containing tau inside tau + rho, by exhaustive search.
Simplex brute_max_connecting(const SimplicialComplex& x, const Simplex& rho, const Simplex& tau) {
  const auto& rv = rho.vertices();
  std::optional<Simplex> best;
  bool tie = false;
  for (unsigned mask = 0; mask < (1u << rv.size()); ++mask) {
    auto vs = tau.vertices();
    for (std::size_t i = 0; i < rv.size(); ++i)
      if (mask >> i & 1) vs.push_back(rv[i]);
    Simplex s(vs);
    if (!x.contains(s)) continue;
    if (!best || s.size() > best->size()) {
      best = s;
      tie = false;
    } else if (s.size() == best->size()) {
      tie = true;
    }
  }
  if (tie) throw Failure("maximal connecting simplex is not unique");
  return *best;
}

std::string criterion8() {
  std::size_t pairs = 0, stages = 0;
  auto run = [&](const SimplicialComplex& x) {
    for (const auto& rho : x.faces()) {
      auto filt = natural_filtration(x, rho);
      for (const auto& tau : filt.link.faces()) {
        expect(max_connecting_simplex(x, rho, tau) == brute_max_connecting(x, rho, tau),
               "max_connecting_simplex at rho=" + rho.to_string() + " tau=" + tau.to_string());
        ++pairs;
      }
      for (int k = -1; k <= filt.top_index(); ++k) {
        expect_collapsible(filt.stage(k), cat("stage ", k, " of star(", rho.to_string(), ")"));
        ++stages;
      }
    }
  };
  run(NchtComplex(4).complex());
  run(triangular_patch().complex);
  return cat(pairs, " (rho, tau) pairs match the oracle; ", stages, " filtration stages COLLAPSIBLE");
}

SimplicialComplex projective_plane() {
  return SimplicialComplex::from_maximal_faces({Simplex{1, 2, 3}, Simplex{1, 3, 4}, Simplex{1, 4, 5}, Simplex{1, 5, 6},
                                                Simplex{1, 2, 6}, Simplex{2, 3, 5}, Simplex{3, 4, 6}, Simplex{2, 4, 5},
                                                Simplex{3, 5, 6}, Simplex{2, 4, 6}});
}

std::string criterion9() {
  std::vector<SimplicialComplex> suite;
  for (int n = 3; n <= 6; ++n) suite.push_back(NchtComplex(n).complex());
  for (int n = 3; n <= 5; ++n) suite.push_back(bounded_link(enumerate_nc_lattice(n).poset));
  for (int n = 3; n <= 4; ++n)
    for (int k = 2; k <= n; ++k) suite.push_back(bounded_link(parking_poset(classify_pf(n).by_k.at(k), n).poset));
  suite.push_back(triangular_patch().complex);
  for (int k = 2; k <= 6; ++k) suite.push_back(SimplicialComplex::simplex_boundary(k));
  suite.push_back(projective_plane());
  suite.push_back(SimplicialComplex());
  std::mt19937 rng(9);
  for (int i = 0; i < 60; ++i) {
    std::vector<Simplex> gens;
    int count = 2 + static_cast<int>(rng() % 10);
    for (int g = 0; g < count; ++g) {
      std::set<std::uint32_t> s;
      int size = 1 + static_cast<int>(rng() % 4);
      while (static_cast<int>(s.size()) < size) s.insert(1 + rng() % 8);
      gens.emplace_back(std::vector<Vertex>(s.begin(), s.end()));
    }
    suite.push_back(SimplicialComplex::from_maximal_faces(gens));
  }
  std::size_t checked = 0;
  for (const auto& x : suite) {
    if (x.face_count() > 5000) continue;
    auto h = reduced_homology(x);
    auto expected = oracle::rational_betti(as_sets(x));
    expect(h.betti.size() == expected.size(), "betti vector length");
    for (std::size_t i = 0; i < expected.size(); ++i)
      expect(static_cast<long>(h.betti[i]) == expected[i], cat("betti mismatch on complex #", checked));
    expect(h.alternating_betti_sum() == euler_characteristic(x) - 1, "alternating Betti sum");
    ++checked;
  }
  expect(reduced_homology(projective_plane()).torsion_at(1) == std::vector<mpz_class>{2}, "projective plane torsion");
  return cat(checked, " complexes: SNF Betti numbers equal rational ranks, alternating sums equal chi - 1");
}

std::string criterion10() {
  for (int n = 1; n <= 6; ++n) {
    auto c = classify_pf(n);
    long long total = static_cast<long long>(c.permutations.size());
    long long factorial = 1;
    for (int i = 2; i <= n; ++i) factorial *= i;
    expect(total == factorial, cat("permutation count at n=", n));
    expect(c.by_k.count(1) == 0 || c.by_k.at(1).empty(), cat("PF_{", n, ",1} is not empty"));
    for (const auto& [k, pfs] : c.by_k) total += static_cast<long long>(pfs.size());
    expect(total == oracle::power(n + 1, n - 1), cat("partition identity at n=", n));
  }
  return "n=1..6: sum_k |PF_{n,k}| + n! = (n+1)^(n-1), PF_{n,1} empty";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<std::string()>>> criteria{
      {"figure counts", criterion1},
      {"bijection suite", criterion2},
      {"unused boundary edge", criterion3},
      {"undesired last parking space", criterion4},
      {"undesired parking space and decomposition", criterion5},
      {"noncontracting stars", criterion6},
      {"retraction property suite", criterion7},
      {"flag machinery", criterion8},
      {"homology engine oracle", criterion9},
      {"partition identity", criterion10},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    std::string verdict, detail;
    try {
      detail = criteria[i].second();
      verdict = "PASS";
    } catch (const std::exception& e) {
      detail = e.what();
      verdict = "FAIL";
      ++failures;
    }
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::cout << verdict << " criterion " << i + 1 << ": " << criteria[i].first << " - " << detail << " ("
              << static_cast<long>(ms) << " ms)" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
