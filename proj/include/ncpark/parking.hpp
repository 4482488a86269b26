#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ncpark/limits.hpp"
#include "ncpark/noncrossing_partition.hpp"
#include "ncpark/permutation.hpp"

namespace ncpark {

/// True iff the entries, sorted weakly increasing, satisfy sorted[i] <= i+1.
bool is_parking_function(std::span<const int> entries);

class ParkingFunction {
 public:
  ParkingFunction() = default;
  /// Throws MalformedInput unless `entries` is a nonempty parking function.
  explicit ParkingFunction(std::vector<int> entries);
  static ParkingFunction parse(std::string_view text);  // "1,1,3"

  int length() const { return static_cast<int>(entries_.size()); }
  const std::vector<int>& entries() const { return entries_; }
  /// Largest value in {1..n} missing from the entries; nullopt for permutations.
  std::optional<int> largest_undesired() const;
  std::string to_string() const;

  auto operator<=>(const ParkingFunction&) const = default;

 private:
  std::vector<int> entries_;
};

inline std::optional<int> largest_undesired(const ParkingFunction& pf) { return pf.largest_undesired(); }

/// Visits PF_n in lexicographic order without materializing it.
void for_each_parking_function(int n, const std::function<void(const std::vector<int>&)>& visit,
                               const EnumerationLimits& limits = {});
std::vector<ParkingFunction> enumerate_parking_functions(int n, const EnumerationLimits& limits = {});

/// PF_n split into the permutations of 1..n and the classes PF_{n,k}.
/// `by_k` has an entry (possibly empty) for every k in 1..n.
struct PfClassification {
  int n = 0;
  std::vector<ParkingFunction> permutations;
  std::map<int, std::vector<ParkingFunction>> by_k;
};

PfClassification classify_pf(int n, const EnumerationLimits& limits = {});
/// PF_{n,k} alone, lexicographically sorted.
std::vector<ParkingFunction> pf_class(int n, int k, const EnumerationLimits& limits = {});

/// Reads off min(factor_i) for each factor.
ParkingFunction stanley_map(const Factorization& f);

/// Stanley's bijection between maximal chains of NC_{n+1} and PF_n, realized
/// by enumerating the chains and inverting the read-off map. Construction
/// fails with InternalError if the map is not a bijection onto PF_n.
class StanleyBijection {
 public:
  explicit StanleyBijection(int n, const EnumerationLimits& limits = {});

  int n() const { return n_; }
  const NcLattice& lattice() const { return lattice_; }
  const std::vector<MaximalChain>& chains() const { return chains_; }
  /// The chain labeled by `pf`; throws InternalError when absent.
  const MaximalChain& chain_for(const ParkingFunction& pf) const;
  Factorization inverse(const ParkingFunction& pf) const { return chain_for(pf).factorization; }

 private:
  int n_;
  NcLattice lattice_;
  std::vector<MaximalChain> chains_;
  std::map<std::vector<int>, std::size_t> by_pf_;
};

/// One-shot inverse; builds the full table for the length of `pf`.
Factorization stanley_inverse(const ParkingFunction& pf, const EnumerationLimits& limits = {});

}  // namespace ncpark
