#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ncpark/certify.hpp"
#include "ncpark/cli.hpp"
#include "ncpark/homology.hpp"
#include "ncpark/hypertrees.hpp"
#include "ncpark/ncht_complex.hpp"
#include "ncpark/noncrossing_partition.hpp"
#include "ncpark/parking.hpp"
#include "ncpark/poset_complexes.hpp"
#include "ncpark/retraction.hpp"
#include "ncpark/sample_complexes.hpp"
#include "ncpark/trees.hpp"

namespace py = pybind11;
using namespace ncpark;

namespace {

using Face = std::vector<std::uint64_t>;

Simplex to_simplex(const Face& face) {
  std::vector<Vertex> vs;
  for (auto key : face) vs.push_back(Vertex::tagged(static_cast<std::uint32_t>(key >> 32), static_cast<std::uint32_t>(key)));
  return Simplex(std::move(vs));
}

Face to_face(const Simplex& s) {
  Face out;
  for (auto v : s.vertices()) out.push_back(v.key());
  return out;
}

std::vector<Face> to_faces(const std::vector<Simplex>& simplices) {
  std::vector<Face> out;
  for (const auto& s : simplices) out.push_back(to_face(s));
  return out;
}

std::size_t count(const std::string& kind, int n) {
  if (kind == "nc") return enumerate_noncrossing_partitions(n).size();
  if (kind == "pf") return enumerate_parking_functions(n).size();
  if (kind == "trees") return enumerate_noncrossing_trees(n).size();
  if (kind == "hypertrees") return enumerate_hypertrees(n).size();
  if (kind == "chains") return maximal_chains(enumerate_nc_lattice(n + 1)).size();
  throw py::value_error("unknown kind: " + kind);
}

py::dict homology_dict(const HomologyProfile& h) {
  py::dict d;
  d["betti"] = h.betti;
  std::vector<std::vector<std::string>> torsion;
  for (const auto& group : h.torsion) {
    torsion.emplace_back();
    for (const auto& t : group) torsion.back().push_back(t.get_str());
  }
  d["torsion"] = torsion;
  d["euler_characteristic"] = h.euler_characteristic;
  d["trivial"] = h.is_trivial();
  d["text"] = h.to_string();
  return d;
}

}  // namespace

PYBIND11_MODULE(_ncpark, m) {
  m.doc() = "Noncrossing partitions, parking functions and their complexes";

  py::register_exception<MalformedInput>(m, "MalformedInput", PyExc_ValueError);
  py::register_exception<ContractViolation>(m, "ContractViolation", PyExc_ValueError);
  py::register_exception<ResourceLimit>(m, "ResourceLimit", PyExc_RuntimeError);

  py::class_<SimplicialComplex>(m, "SimplicialComplex")
      .def(py::init([](const std::vector<Face>& maximal) {
             std::vector<Simplex> gens;
             for (const auto& f : maximal) gens.push_back(to_simplex(f));
             return SimplicialComplex::from_maximal_faces(gens);
           }),
           py::arg("maximal_faces"))
      .def_static("parse", [](const std::string& text) { return SimplicialComplex::parse(text); })
      .def_static("simplex_boundary", &SimplicialComplex::simplex_boundary)
      .def_property_readonly("faces", [](const SimplicialComplex& x) { return to_faces(x.faces()); })
      .def_property_readonly("maximal_faces", [](const SimplicialComplex& x) { return to_faces(x.maximal_faces()); })
      .def_property_readonly("dimension", &SimplicialComplex::dimension)
      .def("f_vector", &SimplicialComplex::f_vector)
      .def("is_flag", [](const SimplicialComplex& x) { return is_flag(x); })
      .def("euler_characteristic", [](const SimplicialComplex& x) { return euler_characteristic(x); })
      .def("star", [](const SimplicialComplex& x, const Face& rho) { return star(x, to_simplex(rho)); })
      .def("link", [](const SimplicialComplex& x, const Face& rho) { return link(x, to_simplex(rho)); })
      .def("__len__", &SimplicialComplex::face_count)
      .def("__contains__", [](const SimplicialComplex& x, const Face& f) { return x.contains(to_simplex(f)); })
      .def("__eq__", [](const SimplicialComplex& a, const SimplicialComplex& b) { return a == b; })
      .def("__str__", &SimplicialComplex::to_string);

  m.def("count", &count, py::arg("kind"), py::arg("n"));
  m.def("noncrossing_partitions", [](int n) {
    std::vector<std::string> out;
    for (const auto& p : enumerate_noncrossing_partitions(n)) out.push_back(p.to_string());
    return out;
  });
  m.def("parking_functions", [](int n) {
    std::vector<std::vector<int>> out;
    for (const auto& pf : enumerate_parking_functions(n)) out.push_back(pf.entries());
    return out;
  });
  m.def("stanley_map", [](const std::string& factorization) {
    return stanley_map(Factorization::parse(factorization)).entries();
  });
  m.def("stanley_inverse", [](const std::vector<int>& pf) { return stanley_inverse(ParkingFunction(pf)).to_string(); });
  m.def("hypertree_to_dissection", [](int n, const std::string& h) {
    return hypertree_to_dissection(NoncrossingHypertree::parse(n, h)).to_string();
  });
  m.def("dissection_to_hypertree", [](const std::string& d) {
    return dissection_to_hypertree(EvenDissection::parse(d)).to_string();
  });

  m.def("ncht_complex", [](int n) { return NchtComplex(n).complex(); });
  m.def("unused_edge_subcomplex", [](int n, const std::string& e) {
    NchtComplex x(n);
    return unused_edge_subcomplex(x, parse_boundary_edge(n, e));
  });
  m.def("nc_link", [](int n) { return bounded_link(enumerate_nc_lattice(n).poset); });
  m.def("pf_link", [](int n, int k) {
    auto classes = classify_pf(n);
    auto it = classes.by_k.find(k);
    if (it == classes.by_k.end() || it->second.empty()) throw py::value_error("PF_{n,k} is empty");
    return bounded_link(parking_poset(it->second, n).poset);
  });
  m.def("triangular_patch", [] { return triangular_patch().complex; });

  m.def("reduced_homology", [](const SimplicialComplex& x) { return homology_dict(reduced_homology(x)); });
  m.def(
      "certify",
      [](const SimplicialComplex& x, std::uint64_t seed) {
        CertifyOptions options;
        options.collapse.seed = seed;
        auto report = certify_contractible(x, options);
        py::dict d;
        d["tier"] = std::string(tier_name(report.tier));
        d["certificate"] = report.certificate ? py::object(py::str(report.certificate->to_text())) : py::none();
        d["homology"] = report.homology ? py::object(homology_dict(*report.homology)) : py::none();
        d["note"] = report.note;
        return d;
      },
      py::arg("complex"), py::arg("seed") = 0);
  m.def("replay", [](const SimplicialComplex& x, const std::string& certificate) {
    return replay_certificate(x, CollapseCertificate::parse(certificate)).ok;
  });

  // Weights cross the boundary as "p/q" strings.
  m.def("retract_point", [](const Face& sigma, const Face& tau, const std::map<std::uint64_t, std::string>& weights) {
    RationalVector w;
    for (const auto& [v, text] : weights) {
      mpq_class x(text);
      x.canonicalize();
      w[Vertex(static_cast<std::uint32_t>(v))] = x;
    }
    RetractionProblem r(to_simplex(sigma), to_simplex(tau));
    std::map<std::uint64_t, std::string> out;
    auto image = retract_point(r, BarycentricPoint(w));
    for (const auto& [v, x] : image.weights()) out[v.key()] = x.get_str();
    return out;
  });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::vector<std::string> full{"ncpark"};
    full.insert(full.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : full) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
