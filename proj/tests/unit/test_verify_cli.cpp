#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "artifacts.hpp"
#include "ncpark/cli.hpp"
#include "ncpark/errors.hpp"
#include "ncpark/hypertrees.hpp"
#include "ncpark/noncrossing_partition.hpp"
#include "ncpark/parking.hpp"
#include "ncpark/simplicial_complex.hpp"
#include "ncpark/trees.hpp"

namespace fs = std::filesystem;
using namespace ncpark;
using Json = nlohmann::json;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("ncpark-test-" + std::to_string(rd()) + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "ncpark");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

Run run_in(const TempDir& dir, std::vector<std::string> args) {
  args.push_back("--cache-dir");
  args.push_back(dir.path.string());
  return run(std::move(args));
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t dot_count(const std::string& dot, const std::string& key) {
  auto pos = dot.find(key + "=");
  REQUIRE(pos != std::string::npos);
  return std::stoul(dot.substr(pos + key.size() + 1));
}

}  // namespace

TEST_CASE("enumerate counts") {
  TempDir dir;
  CHECK(run_in(dir, {"enumerate", "trees", "--n", "4"}).out == "12\n");
  CHECK(run_in(dir, {"enumerate", "pf", "--n", "3"}).out == "16\n");
  CHECK(run_in(dir, {"enumerate", "nc", "--n", "1"}).out == "1\n");
  CHECK(run_in(dir, {"enumerate", "hypertrees", "--n", "2-4"}).out == "n=2 1\nn=3 4\nn=4 21\n");
  CHECK(run_in(dir, {"enumerate", "chains", "--n", "3"}).out == "16\n");
  auto r = run_in(dir, {"enumerate", "trees", "--n", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "12\n");
}

TEST_CASE("enumerate caches round-trip") {
  TempDir dir;
  for (std::string kind : {"nc", "pf", "trees", "hypertrees", "chains"}) {
    const int n = 4;
    REQUIRE(run_in(dir, {"enumerate", kind, "--n", std::to_string(n)}).code == 0);
    auto path = dir.path / "enumerate" / (kind + "-n4.txt");
    REQUIRE(fs::exists(path));
    auto file = cli::CacheFile::parse(slurp(path));
    CHECK(file.kind == kind);
    CHECK(file.n == n);
    CHECK(cli::CacheFile::parse(file.to_text()).lines == file.lines);
    for (const auto& line : file.lines) {
      std::string again;
      if (kind == "nc") again = NoncrossingPartition::parse(n, line).to_string();
      if (kind == "pf") again = ParkingFunction::parse(line).to_string();
      if (kind == "trees") again = NoncrossingTree::parse(n, line).to_string();
      if (kind == "hypertrees") again = NoncrossingHypertree::parse(n, line).to_string();
      if (kind == "chains") again = Factorization::parse(line).to_string();
      CHECK(again == line);
    }
  }
}

TEST_CASE("corrupted cache is detected") {
  TempDir dir;
  REQUIRE(run_in(dir, {"enumerate", "pf", "--n", "3"}).code == 0);
  auto path = dir.path / "enumerate" / "pf-n3.txt";
  auto text = slurp(path);
  auto pos = text.find("1,1,2");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 5, "1,2,1");
  std::ofstream(path) << text;
  auto r = run_in(dir, {"enumerate", "pf", "--n", "3"});
  CHECK(r.code == 1);
  CHECK_FALSE(r.err.empty());
  CHECK_THROWS_AS(cli::CacheFile::parse(text), MalformedInput);
}

TEST_CASE("cache directory resolution") {
  TempDir dir;
  ::setenv("NCPARK_CACHE_DIR", dir.path.c_str(), 1);
  CHECK(cli::resolve_cache_dir("") == dir.path);
  CHECK(cli::resolve_cache_dir("elsewhere") == fs::path("elsewhere"));
  REQUIRE(run({"enumerate", "nc", "--n", "3"}).code == 0);
  CHECK(fs::exists(dir.path / "enumerate" / "nc-n3.txt"));
  ::unsetenv("NCPARK_CACHE_DIR");
  CHECK(cli::resolve_cache_dir("") == fs::path("ncpark-cache"));
}

TEST_CASE("bijections") {
  TempDir dir;
  auto r = run_in(dir, {"bijections", "--n", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("16 = 16 = 16 = 16") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
  auto two = run_in(dir, {"bijections", "--n", "1-2"});
  CHECK(two.code == 0);
  CHECK(two.out.find("n=1 counts: 1 = 1 = 1 = 1") != std::string::npos);
  CHECK(two.out.find("n=2 counts: 3 = 3 = 3 = 3") != std::string::npos);
}

TEST_CASE("verify commands") {
  TempDir dir;
  auto edge = run_in(dir, {"verify", "edge", "--n", "4", "--e", "bottom"});
  CHECK(edge.code == 0);
  CHECK(edge.out.find("COLLAPSIBLE") != std::string::npos);
  CHECK(edge.out.find("verdict: PASS") != std::string::npos);

  CHECK(run_in(dir, {"verify", "decomp", "--n", "3", "--k", "2"}).code == 0);
  CHECK(run_in(dir, {"verify", "last", "--n", "3-4"}).code == 0);
  CHECK(run_in(dir, {"verify", "space", "--n", "4", "--k", "2"}).code == 0);
  CHECK(run_in(dir, {"verify", "star-lemma", "--n", "4"}).code == 0);
  CHECK(run_in(dir, {"verify", "join", "--n", "4"}).code == 0);

  auto k1 = run_in(dir, {"verify", "space", "--n", "3", "--k", "1"});
  CHECK(k1.code == 2);
  CHECK(k1.err.find("k must exceed 1") != std::string::npos);
  CHECK(run_in(dir, {"verify", "space", "--n", "3", "--k", "4"}).code == 2);
  CHECK(run_in(dir, {"verify", "edge", "--n", "7"}).code == 2);
  CHECK(run_in(dir, {"verify", "last", "--n", "6"}).code == 2);
  CHECK(run_in(dir, {"verify", "edge", "--n", "4", "--e", "2-4"}).code == 2);
  CHECK(run_in(dir, {"verify", "nonsense", "--n", "4"}).code == 2);
  CHECK(run_in(dir, {"enumerate", "nc", "--n", "9"}).code == 2);
  CHECK(run_in(dir, {"enumerate", "nc", "--n", "0"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("reports are deterministic and certificates replay") {
  TempDir dir;
  auto first = run_in(dir, {"verify", "last", "--n", "3", "--format", "json"});
  auto second = run_in(dir, {"verify", "last", "--n", "3", "--format", "json"});
  REQUIRE(first.code == 0);
  auto a = Json::parse(first.out);
  auto b = Json::parse(second.out);
  CHECK(a["schema_version"] == 1);
  CHECK(a["verdict"] == "PASS");
  CHECK(a["determinism_hash"] == b["determinism_hash"]);
  CHECK(cli::RunDocument::determinism_hash(a) == a["determinism_hash"].get<std::string>());
  a.erase("timings_ms");
  b.erase("timings_ms");
  CHECK(a == b);
  auto changed = a;
  changed["instances"][0]["counts"]["poset_elements"] = 0;
  CHECK(cli::RunDocument::determinism_hash(changed) != a["determinism_hash"].get<std::string>());

  auto report = Json::parse(slurp(dir.path / "reports" / "verify-last-n3-3.json"));
  CHECK(report["determinism_hash"] == a["determinism_hash"]);

  auto cert = dir.path / "certificates" / "pf-link-n3-k3.cert";
  auto complex = dir.path / "certificates" / "pf-link-n3-k3.complex";
  REQUIRE(fs::exists(cert));
  auto ok = run({"replay", cert.string(), complex.string()});
  CHECK(ok.code == 0);
  CHECK(ok.out.rfind("PASS replayed 7 steps", 0) == 0);

  // Replay against a different complex fails on the start hash.
  auto other = dir.path / "other.complex";
  std::ofstream(other) << "1,2,3\n";
  CHECK(run({"replay", cert.string(), other.string()}).code == 1);
  CHECK(run({"replay", (dir.path / "missing.cert").string(), complex.string()}).code == 2);
}

TEST_CASE("export") {
  TempDir dir;
  auto ncht = run_in(dir, {"export", "ncht", "--n", "4", "--format", "dot"});
  REQUIRE(ncht.code == 0);
  CHECK(ncht.out.rfind("graph ", 0) == 0);
  CHECK(dot_count(ncht.out, "nodes") == 8);
  CHECK(dot_count(ncht.out, "edges") == 12);

  auto link = run_in(dir, {"export", "nc-link", "--n", "4", "--format", "dot"});
  REQUIRE(link.code == 0);
  CHECK(dot_count(link.out, "nodes") == 12);
  CHECK(dot_count(link.out, "edges") == 16);
  CHECK(dot_count(link.out, "dashed") == 9);
  CHECK(dot_count(link.out, "solid") == 7);
  CHECK(run_in(dir, {"export", "nc-link", "--n", "4", "--format", "dot"}).out == link.out);

  auto point = run_in(dir, {"export", "point", "--format", "dot"});
  CHECK(dot_count(point.out, "nodes") == 1);
  CHECK(dot_count(point.out, "edges") == 0);

  CHECK(run_in(dir, {"export", "ncht", "--n", "5", "--format", "dot"}).code == 2);
  auto text = run_in(dir, {"export", "ncht", "--n", "5", "--format", "text"});
  CHECK(text.code == 0);
  CHECK(SimplicialComplex::parse(text.out).face_count() == 125);

  auto file = dir.path / "ncht4.dot";
  CHECK(run_in(dir, {"export", "ncht", "--n", "4", "--format", "dot", "-o", file.string()}).code == 0);
  CHECK(slurp(file) == ncht.out);
}
