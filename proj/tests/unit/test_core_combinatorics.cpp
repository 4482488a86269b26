#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "../oracles.hpp"
#include "ncpark/errors.hpp"
#include "ncpark/noncrossing_partition.hpp"
#include "ncpark/parking.hpp"
#include "ncpark/permutation.hpp"
#include "ncpark/poset.hpp"

using namespace ncpark;

namespace {

std::vector<std::pair<int, int>> pairs_of(const Factorization& f) {
  std::vector<std::pair<int, int>> out;
  for (const auto& t : f.factors()) out.emplace_back(t.i, t.j);
  return out;
}

}  // namespace

TEST_CASE("permutation basics") {
  auto c = Permutation::boundary_cycle(4);
  CHECK(c(1) == 2);
  CHECK(c(4) == 1);
  CHECK(c.to_string() == "(1,2,3,4)");
  CHECK((c * c.inverse()).is_identity());
  CHECK(Permutation::identity(3).to_string() == "()");
  CHECK_THROWS_AS(Permutation(std::vector<int>{1, 1, 2}), MalformedInput);

  // Left to right: (1,2) acts first.
  auto a = Transposition(1, 2).as_permutation(3);
  auto b = Transposition(2, 3).as_permutation(3);
  CHECK((a * b)(1) == 3);
  CHECK((b * a).to_string() == "(1,2,3)");
}

TEST_CASE("is_noncrossing_partition") {
  CHECK(is_noncrossing_partition({{1, 2, 3, 4}}, 4));
  CHECK_FALSE(is_noncrossing_partition({{1, 3}, {2, 4}}, 4));
  CHECK_THROWS_AS(is_noncrossing_partition({{1, 2}, {2, 3}}, 3), MalformedInput);
  CHECK_THROWS_AS(is_noncrossing_partition({{1, 2}}, 3), MalformedInput);

  for (int n = 1; n <= 7; ++n) {
    std::size_t oracle_count = 0;
    for (const auto& p : oracle::set_partitions(n)) {
      const BlockSet& blocks = p;
      bool expected = oracle::noncrossing(p);
      CHECK(is_noncrossing_partition(blocks, n) == expected);
      oracle_count += expected;
    }
    CHECK(enumerate_noncrossing_partitions(n).size() == oracle_count);
  }
  CHECK(enumerate_noncrossing_partitions(4).size() == 14);
}

TEST_CASE("noncrossing partition text form") {
  auto p = NoncrossingPartition::parse(4, "{1,3}{2}{4}");
  CHECK(p.to_string() == "{1,3}{2}{4}");
  CHECK(p.rank() == 1);
  CHECK(NoncrossingPartition::parse(4, "{4}{2}{3,1}") == p);
  CHECK_THROWS_AS(NoncrossingPartition::parse(4, "{1,3}{2,4}"), MalformedInput);
  for (int n = 1; n <= 6; ++n)
    for (const auto& q : enumerate_noncrossing_partitions(n)) CHECK(NoncrossingPartition::parse(n, q.to_string()) == q);
}

TEST_CASE("enumerate_nc_lattice") {
  CHECK(enumerate_nc_lattice(1).elements.size() == 1);
  CHECK(enumerate_nc_lattice(3).elements.size() == 5);
  auto l4 = enumerate_nc_lattice(4);
  CHECK(l4.elements.size() == 14);
  std::size_t interior = 0;
  for (std::size_t i = 0; i < l4.elements.size(); ++i) interior += (i != l4.bottom() && i != l4.top());
  CHECK(interior == 12);
  for (int n = 1; n <= 6; ++n) {
    auto l = enumerate_nc_lattice(n);
    CHECK(l.poset.is_bounded());
    CHECK(l.poset.is_graded());
    CHECK(l.poset.is_lattice());
    auto rank = *l.poset.rank_function();
    for (std::size_t i = 0; i < l.elements.size(); ++i) CHECK(rank[i] == l.elements[i].rank());
    CHECK(l.elements[l.bottom()].to_permutation().is_identity());
    CHECK(l.elements[l.top()].to_permutation() == Permutation::boundary_cycle(n));
  }
  EnumerationLimits tight;
  tight.nc_max = 4;
  CHECK_THROWS_AS(enumerate_nc_lattice(5, tight), ResourceLimit);
}

TEST_CASE("partition_to_permutation") {
  CHECK(partition_to_permutation(NoncrossingPartition::parse(4, "{1,2,3,4}")) == Permutation::boundary_cycle(4));
  CHECK(partition_to_permutation(NoncrossingPartition::parse(4, "{1,3}{2}{4}")) ==
        Transposition(1, 3).as_permutation(4));
  CHECK(partition_to_permutation(NoncrossingPartition::bottom(5)).is_identity());
  for (const auto& p : enumerate_noncrossing_partitions(6))
    CHECK(NoncrossingPartition::from_permutation(p.to_permutation()) == p);
}

TEST_CASE("chain_label") {
  for (int n = 1; n <= 5; ++n) {
    auto l = enumerate_nc_lattice(n);
    const auto& lo = l.elements[l.bottom()];
    const auto& hi = l.elements[l.top()];
    CHECK(chain_label(lo, hi) == Permutation::boundary_cycle(n));
    for (const auto& p : l.elements) CHECK(chain_label(p, p).is_identity());
  }
  auto l4 = enumerate_nc_lattice(4);
  std::size_t covers = 0;
  for (std::size_t a = 0; a < l4.elements.size(); ++a)
    for (auto b : l4.poset.upper_covers(a)) {
      ++covers;
      CHECK(chain_label(l4.elements[a], l4.elements[b]).as_transposition().has_value());
    }
  CHECK(covers > 0);
  CHECK_THROWS_AS(chain_label(NoncrossingPartition::parse(3, "{1,2}{3}"), NoncrossingPartition::parse(3, "{1,3}{2}")),
                  ContractViolation);
}

TEST_CASE("maximal_chains against brute-force factorizations") {
  auto nc3 = maximal_chains(enumerate_nc_lattice(3));
  REQUIRE(nc3.size() == 3);
  std::set<std::vector<std::pair<int, int>>> got;
  for (const auto& f : nc3) got.insert(pairs_of(f));
  CHECK(got == std::set<std::vector<std::pair<int, int>>>{{{1, 2}, {1, 3}}, {{1, 3}, {2, 3}}, {{2, 3}, {1, 2}}});
  CHECK(maximal_chains(enumerate_nc_lattice(2)).size() == 1);
  CHECK(maximal_chains(enumerate_nc_lattice(4)).size() == 16);

  for (int n = 1; n <= 4; ++n) {
    auto brute = oracle::cycle_factorizations(n);
    std::set<std::vector<std::pair<int, int>>> expected(brute.begin(), brute.end());
    std::set<std::vector<std::pair<int, int>>> actual;
    for (const auto& f : maximal_chains(enumerate_nc_lattice(n + 1))) actual.insert(pairs_of(f));
    CHECK(actual == expected);
    CHECK(static_cast<long long>(actual.size()) == oracle::power(n + 1, n - 1));
  }
}

TEST_CASE("factorization text form and validation") {
  auto f = Factorization::parse("(1,2)(1,3)");
  CHECK(f.to_string() == "(1,2)(1,3)");
  CHECK(f.length() == 2);
  CHECK_THROWS_AS(Factorization::parse("(1,2)(2,3)"), MalformedInput);
  CHECK_THROWS_AS(Factorization::parse("(1,2"), MalformedInput);
}

TEST_CASE("is_parking_function") {
  CHECK(is_parking_function(std::vector<int>{1, 1, 2}));
  CHECK_FALSE(is_parking_function(std::vector<int>{2, 3, 3}));
  for (int n = 1; n <= 5; ++n) {
    std::size_t count = 0;
    for (const auto& t : oracle::all_tuples(n, n)) {
      CHECK(is_parking_function(t) == oracle::parking(t));
      count += oracle::parking(t);
    }
    CHECK(enumerate_parking_functions(n).size() == count);
    CHECK(static_cast<long long>(count) == oracle::power(n + 1, n - 1));
  }
  CHECK(enumerate_parking_functions(3).size() == 16);
  CHECK_THROWS_AS(ParkingFunction({2, 2}), MalformedInput);
  CHECK(ParkingFunction::parse("1,1,3").to_string() == "1,1,3");
}

TEST_CASE("largest_undesired") {
  CHECK(largest_undesired(ParkingFunction({1, 1, 3})) == 2);
  CHECK_FALSE(largest_undesired(ParkingFunction({2, 1, 3})).has_value());
  CHECK(largest_undesired(ParkingFunction({1, 1, 1})) == 3);
}

TEST_CASE("classify_pf") {
  auto c3 = classify_pf(3);
  CHECK(c3.permutations.size() == 6);
  CHECK(c3.by_k.at(2).size() == 3);
  CHECK(c3.by_k.at(3).size() == 7);
  CHECK(classify_pf(2).by_k.at(2) == std::vector<ParkingFunction>{ParkingFunction({1, 1})});

  for (int n = 1; n <= 6; ++n) {
    auto c = classify_pf(n);
    CHECK(c.by_k.at(1).empty());
    long long total = static_cast<long long>(c.permutations.size());
    for (const auto& [k, pfs] : c.by_k) {
      total += static_cast<long long>(pfs.size());
      for (const auto& pf : pfs) CHECK(pf.largest_undesired() == k);
    }
    CHECK(total == oracle::power(n + 1, n - 1));
  }
}

TEST_CASE("stanley map and inverse") {
  CHECK(stanley_map(Factorization::parse("(2,3)(1,2)")) == ParkingFunction({2, 1}));
  CHECK(stanley_map(Factorization::parse("(1,2)(1,3)")) == ParkingFunction({1, 1}));
  CHECK(stanley_map(Factorization::parse("(1,2)")) == ParkingFunction({1}));
  CHECK(stanley_inverse(ParkingFunction({1, 1})) == Factorization::parse("(1,2)(1,3)"));
  CHECK(stanley_inverse(ParkingFunction({2, 1})) == Factorization::parse("(2,3)(1,2)"));

  for (int n = 1; n <= 5; ++n) {
    StanleyBijection table(n);
    std::set<ParkingFunction> image;
    for (const auto& chain : table.chains()) {
      auto pf = stanley_map(chain.factorization);
      CHECK(is_parking_function(pf.entries()));
      image.insert(pf);
      CHECK(table.inverse(pf) == chain.factorization);
    }
    CHECK(image.size() == table.chains().size());
    CHECK(static_cast<long long>(image.size()) == oracle::power(n + 1, n - 1));
  }
}

TEST_CASE("random factorizations multiply to the boundary cycle") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + static_cast<int>(rng() % 5);
    auto chains = maximal_chains(enumerate_nc_lattice(n + 1));
    const auto& f = chains[rng() % chains.size()];
    oracle::Perm prod = oracle::identity(n + 1);
    for (const auto& t : f.factors()) prod = oracle::then(prod, oracle::transposition(n + 1, t.i, t.j));
    CHECK(prod == oracle::cycle_up(n + 1));
  }
}

TEST_CASE("poset primitives") {
  auto b1 = boolean_lattice(1);
  CHECK(b1.size() == 2);
  CHECK(b1.less(0, 1));
  auto b2 = boolean_lattice(2);
  CHECK(poset_isomorphic(b2, poset_product(b1, b1)).has_value());
  CHECK_FALSE(poset_isomorphic(b2, enumerate_nc_lattice(3).poset).has_value());
  CHECK(b2.maximal_chains().size() == 2);
  auto b3 = boolean_lattice(3);
  auto phi = poset_isomorphic(b3, poset_product(b2, b1));
  REQUIRE(phi.has_value());
  CHECK(is_order_isomorphism(b3, poset_product(b2, b1), *phi));
  CHECK_THROWS_AS(Poset::from_leq(2, [](std::size_t, std::size_t) { return true; }), MalformedInput);
}
