#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <functional>
#include <set>
#include <thread>

#include "ncpark/certify.hpp"
#include "ncpark/errors.hpp"
#include "ncpark/hypertrees.hpp"
#include "ncpark/ncht_complex.hpp"
#include "ncpark/noncrossing_partition.hpp"
#include "ncpark/parking.hpp"
#include "ncpark/poset_complexes.hpp"
#include "ncpark/sample_complexes.hpp"
#include "ncpark/text_format.hpp"
#include "ncpark/trees.hpp"

namespace ncpark::cli {

namespace fs = std::filesystem;

namespace {

constexpr int kEdgeCap = 6;
constexpr int kParkingCap = 5;
constexpr int kStarLemmaCap = 5;
constexpr int kJoinCap = 6;

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Json check(const std::string& name, bool pass, const std::string& detail = "") {
  Json c{{"name", name}, {"pass", pass}};
  if (!detail.empty()) c["detail"] = detail;
  return c;
}

long long power(long long base, int exp) {
  long long out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

std::string slugify(std::string text) {
  for (auto& ch : text)
    if (ch == ' ' || ch == '/' || ch == ',') ch = '-';
  return text;
}

void finish_instance(Json& instance) {
  bool pass = true;
  for (const auto& c : instance["checks"]) pass = pass && c["pass"].get<bool>();
  instance["verdict"] = pass ? "PASS" : "FAIL";
}

void print_text(const RunDocument& doc, std::ostream& out) {
  for (const auto& inst : doc.instances) {
    out << inst.value("title", std::string("instance"));
    if (inst.contains("tier")) out << ": " << inst["tier"].get<std::string>();
    out << " " << inst["verdict"].get<std::string>() << "\n";
    for (const auto& c : inst["checks"]) {
      out << "  " << c["name"].get<std::string>() << ": " << (c["pass"].get<bool>() ? "PASS" : "FAIL");
      if (c.contains("detail")) out << " (" << c["detail"].get<std::string>() << ")";
      out << "\n";
    }
  }
  out << "verdict: " << (doc.passed() ? "PASS" : "FAIL") << "\n";
}

int emit(const RunDocument& doc, const RunConfig& cfg, const std::string& slug, std::ostream& out) {
  auto json = doc.to_json();
  write_atomic(cfg.cache_dir / "reports" / (slug + ".json"), json.dump(2) + "\n");
  if (cfg.format == Format::Json)
    out << json.dump(2) << "\n";
  else
    print_text(doc, out);
  return doc.passed() ? 0 : 1;
}

// Certifies x and stores the certificate plus the complex it starts from.
Json certify_with_artifacts(const SimplicialComplex& x, const RunConfig& cfg, const std::string& slug,
                            Json& instance) {
  CertifyOptions options;
  options.collapse = cfg.collapse;
  auto report = certify_contractible(x, options);
  instance["tier"] = std::string(tier_name(report.tier));
  instance["counts"]["complex_faces"] = x.face_count();
  instance["counts"]["complex_maximal_faces"] = x.maximal_faces().size();
  instance["certificate_note"] = report.note;
  if (report.certificate) {
    auto cert_rel = fs::path("certificates") / (slug + ".cert");
    auto complex_rel = fs::path("certificates") / (slug + ".complex");
    write_atomic(cfg.cache_dir / cert_rel, report.certificate->to_text());
    write_atomic(cfg.cache_dir / complex_rel, x.to_string());
    instance["artifacts"].push_back(cert_rel.string());
    instance["artifacts"].push_back(complex_rel.string());
    auto replay = replay_certificate(x, *report.certificate);
    instance["counts"]["collapse_steps"] = report.certificate->steps.size();
    return check("certificate replays", replay.ok, replay.ok ? "" : replay.message);
  }
  if (report.homology) instance["homology"] = report.homology->to_string();
  return check("certificate replays", false, "no certificate");
}

Json new_instance(const std::string& theorem, const std::string& title) {
  return Json{{"theorem", theorem}, {"title", title}, {"params", Json::object()}, {"counts", Json::object()},
              {"checks", Json::array()}, {"artifacts", Json::array()}};
}

Json verify_edge(int n, const RunConfig& cfg) {
  cfg.require_cap(n, kEdgeCap, "verify edge");
  if (n < 3) throw UsageError("verify edge needs n >= 3");
  auto limits = cfg.limits();
  NchtComplex x(n, limits);
  Chord e;
  try {
    e = parse_boundary_edge(n, cfg.e);
  } catch (const MalformedInput& err) {
    throw UsageError(err.what());
  }
  std::string title = "edge n=" + std::to_string(n) + " e=" + e.to_string();
  Json inst = new_instance("unused-boundary-edge", title);
  inst["params"] = {{"n", n}, {"e", e.to_string()}};
  auto te = t_e_face(x, e);
  auto st = star(x.complex(), te);
  auto unused = unused_edge_subcomplex(x, e);
  inst["counts"]["ncht_faces"] = x.complex().face_count();
  inst["counts"]["ncht_vertices"] = x.complex().vertex_count();
  inst["counts"]["trees_omitting_e"] = unused.maximal_faces().size();
  inst["counts"]["star_faces"] = st.face_count();
  inst["checks"].push_back(check("star(T_e) equals the trees-omitting-e subcomplex", st == unused));
  inst["checks"].push_back(check("complex is flag", is_flag(x.complex())));
  auto replay = certify_with_artifacts(st, cfg, "edge-n" + std::to_string(n) + "-e" + e.to_string(), inst);
  inst["checks"].push_back(check("tier is COLLAPSIBLE", inst["tier"] == "COLLAPSIBLE"));
  inst["checks"].push_back(replay);
  finish_instance(inst);
  return inst;
}

Json verify_parking_link(int n, int k, const StanleyBijection& stanley, const RunConfig& cfg, Json inst) {
  auto a = pf_class(n, k, cfg.limits());
  auto pp = parking_poset(a, stanley);
  auto link_complex = bounded_link(pp.poset, cfg.limits());
  inst["counts"]["parking_functions"] = a.size();
  inst["counts"]["poset_elements"] = pp.poset.size();
  inst["counts"]["link_maximal_faces"] = link_complex.maximal_faces().size();
  inst["counts"]["reachability_matches_restriction"] = reachability_matches_restriction(pp, stanley.lattice());
  auto replay = certify_with_artifacts(link_complex, cfg,
                                       "pf-link-n" + std::to_string(n) + "-k" + std::to_string(k), inst);
  inst["checks"].push_back(check("tier is COLLAPSIBLE", inst["tier"] == "COLLAPSIBLE"));
  inst["checks"].push_back(replay);
  return inst;
}

Json verify_decomposition(int n, int k, const StanleyBijection& stanley, const RunConfig& cfg, Json inst) {
  auto big = parking_poset(pf_class(n, k, cfg.limits()), stanley);
  auto small = parking_poset(pf_class(k, k, cfg.limits()), k, cfg.limits());
  auto product = poset_product(small.poset, boolean_lattice(n - k));
  auto phi = poset_isomorphic(big.poset, product);
  inst["counts"]["poset_elements"] = big.poset.size();
  inst["counts"]["product_elements"] = product.size();
  bool audited = phi && is_order_isomorphism(big.poset, product, *phi);
  if (phi) {
    Json map = Json::array();
    const std::size_t cube = std::size_t{1} << (n - k);
    for (std::size_t i = 0; i < phi->size(); ++i) {
      auto target = (*phi)[i];
      map.push_back({big.poset.label(i), small.poset.label(target / cube), target % cube});
    }
    inst["isomorphism"] = map;
  }
  inst["checks"].push_back(check("isomorphism to Poset(PF_{k,k}) x Bool_{n-k}", audited,
                                 phi ? "" : "no isomorphism found"));
  return inst;
}

void require_space_k(int n, int k) {
  if (k <= 1) throw UsageError("k must exceed 1");
  if (k > n) throw UsageError("k must not exceed n");
}

std::vector<int> space_ks(int n, const RunConfig& cfg, bool strict_upper) {
  std::vector<int> ks;
  if (cfg.k) {
    require_space_k(n, *cfg.k);
    if (strict_upper && *cfg.k == n) throw UsageError("decomp needs k < n");
    ks.push_back(*cfg.k);
  } else {
    for (int k = 2; k <= (strict_upper ? n - 1 : n); ++k) ks.push_back(k);
  }
  return ks;
}

std::vector<Json> verify_parking(const std::string& theorem, int n, const RunConfig& cfg) {
  cfg.require_cap(n, kParkingCap, "verify " + theorem);
  if (n < 1) throw UsageError("n must be positive");
  std::vector<int> ks;
  if (theorem == "last") {
    if (cfg.k && *cfg.k != n) throw UsageError("verify last fixes k = n");
    if (n < 2) throw UsageError("verify last needs n >= 2");
    ks.push_back(n);
  } else {
    ks = space_ks(n, cfg, theorem == "decomp");
  }
  StanleyBijection stanley(n, cfg.limits());
  std::vector<Json> out;
  for (int k : ks) {
    std::string title = theorem + " n=" + std::to_string(n) + " k=" + std::to_string(k);
    Json inst = new_instance(theorem == "last"     ? "undesired-last-parking-space"
                             : theorem == "space" ? "undesired-parking-space"
                                                  : "decomposition",
                             title);
    inst["params"] = {{"n", n}, {"k", k}};
    if (theorem == "decomp" || (theorem == "space" && k < n)) inst = verify_decomposition(n, k, stanley, cfg, inst);
    if (theorem != "decomp") inst = verify_parking_link(n, k, stanley, cfg, inst);
    finish_instance(inst);
    out.push_back(std::move(inst));
  }
  return out;
}

Json star_lemma_instance(const std::string& title, const SimplicialComplex& x, const RunConfig& cfg) {
  Json inst = new_instance("stars-contract", title);
  std::size_t pairs = 0, stages = 0, relative_failures = 0;
  std::string first_bad;
  CertifyOptions options;
  options.collapse = cfg.collapse;
  for (const auto& rho : x.faces()) {
    auto filtration = natural_filtration(x, rho);
    for (const auto& tau : filtration.link.faces()) {
      ++pairs;
      // Brute force: star faces whose vertices outside rho are exactly tau.
      std::vector<Simplex> hits;
      for (const auto& s : filtration.star.faces()) {
        std::vector<Vertex> outside;
        for (Vertex v : s.vertices())
          if (!rho.contains(v)) outside.push_back(v);
        if (outside == tau.vertices()) hits.push_back(s);
      }
      std::vector<Simplex> maximal;
      for (const auto& h : hits) {
        bool dominated = std::any_of(hits.begin(), hits.end(),
                                     [&](const Simplex& o) { return o.size() > h.size() && h.is_face_of(o); });
        if (!dominated) maximal.push_back(h);
      }
      auto sigma = max_connecting_simplex(x, rho, tau);
      if ((maximal.size() != 1 || maximal.front() != sigma) && first_bad.empty())
        first_bad = "rho=" + rho.to_string() + " tau=" + tau.to_string();
    }
    for (int k = -1; k <= filtration.top_index(); ++k) {
      ++stages;
      auto report = certify_contractible(filtration.stage(k), options);
      if (report.tier != Tier::Collapsible && first_bad.empty())
        first_bad = "stage " + std::to_string(k) + " of rho=" + rho.to_string() + " is " +
                    std::string(tier_name(report.tier));
      if (k >= 0 && !collapse_onto(filtration.stage(k), filtration.stage(k - 1), cfg.collapse)) ++relative_failures;
    }
  }
  inst["counts"]["rho_tau_pairs"] = pairs;
  inst["counts"]["filtration_stages"] = stages;
  inst["counts"]["relative_collapse_failures"] = relative_failures;
  inst["checks"].push_back(check("flag", is_flag(x)));
  inst["checks"].push_back(
      check("maximal connecting simplices and collapsible stages", first_bad.empty(), first_bad));
  finish_instance(inst);
  return inst;
}

bool same_homology(const HomologyProfile& a, const HomologyProfile& b) {
  auto trim = [](const HomologyProfile& h) {
    auto betti = h.betti;
    auto torsion = h.torsion;
    while (!betti.empty() && betti.back() == 0 && torsion.back().empty()) {
      betti.pop_back();
      torsion.pop_back();
    }
    return std::make_pair(betti, torsion);
  };
  return trim(a) == trim(b);
}

Json verify_join(int n, const RunConfig& cfg) {
  cfg.require_cap(n, kJoinCap, "verify join");
  if (n < 3) throw UsageError("verify join needs n >= 3");
  Json inst = new_instance("links-and-products", "join n=" + std::to_string(n));
  inst["params"] = {{"n", n}};
  std::vector<std::pair<std::string, Poset>> factors;
  for (int a = 2; a <= n - 1; ++a) factors.emplace_back("NC_" + std::to_string(a), enumerate_nc_lattice(a).poset);
  for (int l = 1; l <= 2; ++l) factors.emplace_back("Bool_" + std::to_string(l), boolean_lattice(l));
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t j = i; j < factors.size(); ++j) {
      const auto& [name1, p1] = factors[i];
      const auto& [name2, p2] = factors[j];
      if (p1.size() * p2.size() > 100) continue;
      ++pairs;
      auto lhs = reduced_homology(bounded_link(poset_product(p1, p2), cfg.limits()));
      auto rhs = reduced_homology(suspension(simplicial_join(bounded_link(p1), bounded_link(p2))));
      inst["checks"].push_back(check("link(" + name1 + " x " + name2 + ") ~ susp(join)", same_homology(lhs, rhs),
                                     "H~ = " + lhs.to_string().substr(0, lhs.to_string().size() - 1)));
    }
  inst["counts"]["pairs"] = pairs;
  finish_instance(inst);
  return inst;
}

}  // namespace

void RunConfig::require_cap(int n, int cap, const std::string& what) const {
  if (!allow_large) require_within(n, cap, what);
}

std::vector<int> parse_n_range(const std::string& text) {
  std::vector<int> ends;
  try {
    ends = parse_int_list(text, '-');
  } catch (const MalformedInput&) {
    throw UsageError("--n must be an integer or a range a-b");
  }
  if (ends.empty() || ends.size() > 2) throw UsageError("--n must be an integer or a range a-b");
  int lo = ends.front(), hi = ends.back();
  if (lo < 1 || hi < lo) throw UsageError("--n range must be positive and increasing");
  std::vector<int> ns;
  for (int n = lo; n <= hi; ++n) ns.push_back(n);
  return ns;
}

int cmd_enumerate(const std::string& kind, const RunConfig& cfg, std::ostream& out) {
  auto limits = cfg.limits();
  RunDocument doc;
  doc.command = "enumerate " + kind;
  for (int n : cfg.ns) {
    auto start = Clock::now();
    CacheFile fresh;
    fresh.kind = kind;
    fresh.n = n;
    std::function<std::string(const std::string&)> reparse;
    if (kind == "nc") {
      require_within(n, limits.nc_max, "noncrossing partition enumeration");
      for (const auto& p : enumerate_noncrossing_partitions(n)) fresh.lines.push_back(p.to_string());
      reparse = [n](const std::string& s) { return NoncrossingPartition::parse(n, s).to_string(); };
    } else if (kind == "pf") {
      for (const auto& pf : enumerate_parking_functions(n, limits)) fresh.lines.push_back(pf.to_string());
      reparse = [](const std::string& s) { return ParkingFunction::parse(s).to_string(); };
    } else if (kind == "trees") {
      if (n < 2) throw UsageError("trees need n >= 2");
      for (const auto& t : enumerate_noncrossing_trees(n, limits)) fresh.lines.push_back(t.to_string());
      reparse = [n](const std::string& s) { return NoncrossingTree::parse(n, s).to_string(); };
    } else if (kind == "hypertrees") {
      if (n < 2) throw UsageError("hypertrees need n >= 2");
      for (const auto& h : enumerate_hypertrees(n, limits)) fresh.lines.push_back(h.to_string());
      reparse = [n](const std::string& s) { return NoncrossingHypertree::parse(n, s).to_string(); };
    } else if (kind == "chains") {
      require_within(n, limits.chains_max, "maximal chain enumeration");
      auto lattice = enumerate_nc_lattice(n + 1, limits);
      for (const auto& f : maximal_chains(lattice, limits)) fresh.lines.push_back(f.to_string());
      reparse = [](const std::string& s) { return Factorization::parse(s).to_string(); };
    } else {
      throw UsageError("unknown kind '" + kind + "'");
    }
    for (const auto& line : fresh.lines)
      if (reparse(line) != line) throw VerificationFailure("serialization of " + line + " does not round-trip");
    auto status = sync_cache(cfg.cache_dir / "enumerate" / (kind + "-n" + std::to_string(n) + ".txt"), fresh);
    Json inst = new_instance("enumerate", kind + " n=" + std::to_string(n));
    inst["params"] = {{"n", n}, {"kind", kind}};
    inst["counts"]["count"] = fresh.lines.size();
    inst["cache"] = status == CacheStatus::Written ? "written" : "verified";
    inst["checks"].push_back(check("cache " + inst["cache"].get<std::string>(), true));
    finish_instance(inst);
    doc.add(std::move(inst), elapsed_ms(start));
  }
  auto json = doc.to_json();
  if (cfg.format == Format::Json) {
    out << json.dump(2) << "\n";
  } else {
    for (const auto& inst : doc.instances) {
      if (doc.instances.size() > 1) out << "n=" << inst["params"]["n"].get<int>() << " ";
      out << inst["counts"]["count"].get<std::size_t>() << "\n";
    }
  }
  return 0;
}

int cmd_bijections(const RunConfig& cfg, std::ostream& out) {
  auto limits = cfg.limits();
  RunDocument doc;
  doc.command = "bijections";
  for (int n : cfg.ns) {
    require_within(n, limits.chains_max, "bijection suite");
    auto start = Clock::now();
    Json inst = new_instance("bijections", "bijections n=" + std::to_string(n));
    inst["params"] = {{"n", n}};
    const long long expected = power(n + 1, n - 1);

    std::optional<StanleyBijection> stanley;
    try {
      stanley.emplace(n, limits);
    } catch (const InternalError& e) {
      inst["checks"].push_back(check("stanley bijection", false, e.what()));
    }
    if (stanley) {
      std::size_t chains = stanley->chains().size();
      std::size_t pfs = enumerate_parking_functions(n, limits).size();
      inst["counts"]["maximal_chains"] = chains;
      inst["counts"]["parking_functions"] = pfs;
      inst["counts"]["expected"] = expected;
      inst["checks"].push_back(check("|chains| = |PF_n| = (n+1)^(n-1)",
                                     static_cast<long long>(chains) == expected &&
                                         static_cast<long long>(pfs) == expected));
      std::string bad;
      std::set<OrderedNoncrossingTree> ordered;
      for (const auto& chain : stanley->chains()) {
        const auto& f = chain.factorization;
        auto pf = stanley_map(f);
        if (!(stanley->inverse(pf) == f) && bad.empty()) bad = f.to_string();
        auto tree = factorization_to_tree(f);
        if (!(tree_to_factorization(tree) == f) && bad.empty()) bad = f.to_string();
        ordered.insert(tree);
      }
      inst["checks"].push_back(check("stanley_map round-trips", bad.empty(), bad));
      std::set<OrderedNoncrossingTree> proper;
      for (const auto& t : enumerate_noncrossing_trees(n + 1, limits))
        for (auto& o : proper_orderings(t)) proper.insert(std::move(o));
      inst["counts"]["properly_ordered_trees"] = proper.size();
      inst["counts"]["factorizations"] = chains;
      inst["checks"].push_back(check("factorizations = properly ordered trees", ordered == proper));
    }

    std::string bad;
    std::size_t hypertrees = 0;
    try {
      auto all = enumerate_hypertrees(n + 1, limits);
      hypertrees = all.size();
      HypertreeDissectionBijection table(n + 1, limits);
      for (const auto& h : all)
        if (!(table.to_hypertree(table.to_dissection(h)) == h) && bad.empty()) bad = h.to_string();
      for (const auto& d : table.dissections())
        if (!(table.to_dissection(table.to_hypertree(d)) == d) && bad.empty()) bad = d.to_string();
      if (table.dissections().size() != all.size() && bad.empty()) bad = "dissection count differs";
    } catch (const InternalError& e) {
      bad = e.what();
    }
    inst["counts"]["hypertrees"] = hypertrees;
    inst["checks"].push_back(check("hypertrees <-> dissections on n+1 vertices", bad.empty(), bad));
    finish_instance(inst);
    doc.add(std::move(inst), elapsed_ms(start));
  }
  if (cfg.format == Format::Json) {
    out << doc.to_json().dump(2) << "\n";
  } else {
    print_text(doc, out);
    for (const auto& inst : doc.instances) {
      const auto& c = inst["counts"];
      if (c.contains("maximal_chains"))
        out << "n=" << inst["params"]["n"].get<int>() << " counts: " << c["maximal_chains"] << " = "
            << c["parking_functions"] << " = " << c["properly_ordered_trees"] << " = " << c["expected"] << "\n";
    }
  }
  return doc.passed() ? 0 : 1;
}

struct JobResult {
  std::vector<Json> instances;
  double ms = 0;
  std::exception_ptr error;
};

// Runs independent jobs on a fixed pool; results come back in input order.
std::vector<JobResult> run_pool(const std::vector<std::function<std::vector<Json>()>>& jobs) {
  std::vector<JobResult> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      auto start = Clock::now();
      try {
        results[i].instances = jobs[i]();
      } catch (...) {
        results[i].error = std::current_exception();
      }
      results[i].ms = elapsed_ms(start);
    }
  };
  std::size_t threads = std::min<std::size_t>(jobs.size(), std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

int cmd_verify(const std::string& theorem, const RunConfig& cfg, std::ostream& out) {
  RunDocument doc;
  doc.command = "verify " + theorem;
  std::string slug = "verify-" + theorem;
  std::vector<std::function<std::vector<Json>()>> jobs;
  for (int n : cfg.ns) {
    if (theorem == "edge") {
      jobs.push_back([n, &cfg] { return std::vector<Json>{verify_edge(n, cfg)}; });
    } else if (theorem == "last" || theorem == "space" || theorem == "decomp") {
      jobs.push_back([n, &cfg, &theorem] { return verify_parking(theorem, n, cfg); });
    } else if (theorem == "star-lemma") {
      cfg.require_cap(n, kStarLemmaCap, "verify star-lemma");
      if (n < 3) throw UsageError("verify star-lemma needs n >= 3");
      jobs.push_back([n, &cfg] {
        NchtComplex x(n, cfg.limits());
        return std::vector<Json>{star_lemma_instance("star-lemma ncht n=" + std::to_string(n), x.complex(), cfg)};
      });
    } else if (theorem == "join") {
      jobs.push_back([n, &cfg] { return std::vector<Json>{verify_join(n, cfg)}; });
    } else {
      throw UsageError("unknown theorem '" + theorem + "'");
    }
  }
  if (theorem == "star-lemma") {
    jobs.push_back([&cfg] {
      auto patch = triangular_patch();
      return std::vector<Json>{star_lemma_instance("star-lemma triangular patch", patch.complex, cfg)};
    });
  }
  auto results = run_pool(jobs);
  for (auto& r : results) {
    if (r.error) std::rethrow_exception(r.error);
    double ms = r.instances.empty() ? 0 : r.ms / static_cast<double>(r.instances.size());
    for (auto& inst : r.instances) doc.add(std::move(inst), ms);
  }
  slug += "-n" + std::to_string(cfg.ns.front()) + "-" + std::to_string(cfg.ns.back());
  if (cfg.k) slug += "-k" + std::to_string(*cfg.k);
  if (theorem == "edge") slug += "-e" + cfg.e;
  return emit(doc, cfg, slugify(slug), out);
}

int cmd_export(const std::string& object, const std::string& format, const std::string& output, const RunConfig& cfg,
               std::ostream& out) {
  if (format != "dot" && format != "text") throw UsageError("export format must be dot or text");
  const int n = cfg.ns.front();
  SimplicialComplex x;
  std::function<std::string(Vertex)> node_label = [](Vertex v) { return v.to_string(); };
  std::function<bool(const Simplex&)> dashed = [](const Simplex&) { return false; };
  std::optional<NchtComplex> ncht;
  std::optional<NcLattice> lattice;
  if (object == "ncht") {
    cfg.require_cap(n, kEdgeCap, "export ncht");
    if (n < 3) throw UsageError("ncht needs n >= 3");
    ncht.emplace(n, cfg.limits());
    x = ncht->complex();
    Chord e = parse_boundary_edge(n, cfg.e);
    node_label = [&](Vertex v) { return ncht->diagonals()[v.local() - 1].to_string(); };
    dashed = [&, e](const Simplex& s) {
      auto label = ncht->label_of(s);
      for (const auto& h : label.hyperedges())
        if (std::binary_search(h.begin(), h.end(), e.a) && std::binary_search(h.begin(), h.end(), e.b)) return true;
      return false;
    };
  } else if (object == "nc-link") {
    require_within(n, cfg.limits().nc_max, "export nc-link");
    lattice = enumerate_nc_lattice(n, cfg.limits());
    x = bounded_link(lattice->poset, cfg.limits());
    node_label = [&](Vertex v) { return lattice->elements[v.local()].to_string(); };
    if (n >= 3) {
      Chord e = parse_boundary_edge(n, cfg.e);
      dashed = [&, e](const Simplex& s) {
        if (static_cast<int>(s.size()) != n - 2) return false;
        auto tree = factorization_to_tree(link_face_factorization(*lattice, s));
        return tree.tree.contains(e);
      };
    }
  } else if (object == "point") {
    x = SimplicialComplex::from_maximal_faces({Simplex{1}});
  } else {
    throw UsageError("unknown export object '" + object + "'");
  }

  std::string text;
  if (format == "text") {
    text = x.to_string();
  } else {
    if (x.dimension() > 1)
      throw UsageError("dot export needs a complex of dimension at most 1, got " + std::to_string(x.dimension()));
    text = "graph ncpark {\n";
    for (Vertex v : x.vertices())
      text += "  \"" + v.to_string() + "\" [label=\"" + node_label(v) + "\"];\n";
    std::size_t solid = 0, dash = 0;
    for (auto id : x.faces_of_dimension(1)) {
      const auto& s = x.face(id);
      bool d = dashed(s);
      (d ? dash : solid)++;
      text += "  \"" + s.vertices()[0].to_string() + "\" -- \"" + s.vertices()[1].to_string() + "\"" +
              (d ? " [style=dashed]" : "") + ";\n";
    }
    text += "  // nodes=" + std::to_string(x.vertex_count()) + " edges=" + std::to_string(solid + dash) +
            " dashed=" + std::to_string(dash) + " solid=" + std::to_string(solid) + "\n}\n";
  }
  if (output.empty())
    out << text;
  else
    write_atomic(output, text);
  return 0;
}

int cmd_replay(const std::string& certificate, const std::string& complex, const std::string& target,
               std::ostream& out) {
  auto cert = CollapseCertificate::parse(read_file(certificate));
  auto x = SimplicialComplex::parse(read_file(complex));
  std::optional<SimplicialComplex> t;
  if (!target.empty()) t = SimplicialComplex::parse(read_file(target));
  auto result = replay_certificate(x, cert, t ? &*t : nullptr);
  if (result.ok) {
    out << "PASS replayed " << result.steps_applied << " steps\n";
    return 0;
  }
  out << "FAIL " << result.message << "\n";
  return 1;
}

}  // namespace ncpark::cli
