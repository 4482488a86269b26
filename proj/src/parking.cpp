#include "ncpark/parking.hpp"

#include <algorithm>

#include "ncpark/errors.hpp"
#include "ncpark/text_format.hpp"

namespace ncpark {

bool is_parking_function(std::span<const int> entries) {
  std::vector<int> sorted(entries.begin(), entries.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] < 1 || sorted[i] > static_cast<int>(i) + 1) return false;
  return true;
}

ParkingFunction::ParkingFunction(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty() || !is_parking_function(entries_)) {
    throw MalformedInput("(" + join_ints(entries_, ",") + ") is not a parking function");
  }
}

ParkingFunction ParkingFunction::parse(std::string_view text) { return ParkingFunction(parse_int_list(text)); }

std::optional<int> ParkingFunction::largest_undesired() const {
  std::vector<char> present(entries_.size() + 1, 0);
  for (int a : entries_) present[a] = 1;
  for (int k = length(); k >= 1; --k)
    if (!present[k]) return k;
  return std::nullopt;
}

std::string ParkingFunction::to_string() const { return join_ints(entries_, ","); }

void for_each_parking_function(int n, const std::function<void(const std::vector<int>&)>& visit,
                               const EnumerationLimits& limits) {
  if (n < 1) throw ContractViolation("parking functions need n >= 1");
  require_within(n, limits.pf_max, "parking function enumeration");
  // at_most[i] counts chosen entries <= i. A prefix extends to a parking
  // function iff filling the remaining slots with 1 meets at_most[i] >= i.
  std::vector<int> entries(n, 0);
  std::vector<int> at_most(n + 1, 0);
  std::function<void(int)> place = [&](int pos) {
    if (pos == n) {
      visit(entries);
      return;
    }
    const int remaining = n - pos - 1;
    for (int value = 1; value <= n; ++value) {
      for (int i = value; i <= n; ++i) ++at_most[i];
      bool feasible = true;
      for (int i = 1; i <= n && feasible; ++i) feasible = at_most[i] + remaining >= i;
      if (feasible) {
        entries[pos] = value;
        place(pos + 1);
      }
      for (int i = value; i <= n; ++i) --at_most[i];
    }
  };
  place(0);
}

std::vector<ParkingFunction> enumerate_parking_functions(int n, const EnumerationLimits& limits) {
  std::vector<ParkingFunction> out;
  for_each_parking_function(n, [&](const std::vector<int>& e) { out.emplace_back(e); }, limits);
  return out;
}

PfClassification classify_pf(int n, const EnumerationLimits& limits) {
  PfClassification c;
  c.n = n;
  for (int k = 1; k <= n; ++k) c.by_k[k];
  for_each_parking_function(
      n,
      [&](const std::vector<int>& e) {
        ParkingFunction pf(e);
        if (auto k = pf.largest_undesired()) c.by_k[*k].push_back(std::move(pf));
        else c.permutations.push_back(std::move(pf));
      },
      limits);
  return c;
}

std::vector<ParkingFunction> pf_class(int n, int k, const EnumerationLimits& limits) {
  if (k < 1 || k > n) throw ContractViolation("k must lie in 1..n");
  std::vector<ParkingFunction> out;
  for_each_parking_function(
      n,
      [&](const std::vector<int>& e) {
        ParkingFunction pf(e);
        if (pf.largest_undesired() == k) out.push_back(std::move(pf));
      },
      limits);
  return out;
}

ParkingFunction stanley_map(const Factorization& f) {
  std::vector<int> entries;
  entries.reserve(f.factors().size());
  for (const auto& t : f.factors()) entries.push_back(t.i);
  return ParkingFunction(std::move(entries));
}

StanleyBijection::StanleyBijection(int n, const EnumerationLimits& limits)
    : n_(n), lattice_(enumerate_nc_lattice(n + 1, limits)), chains_(maximal_chain_labels(lattice_, limits)) {
  for (std::size_t i = 0; i < chains_.size(); ++i) {
    auto pf = stanley_map(chains_[i].factorization);
    if (!by_pf_.emplace(pf.entries(), i).second) {
      throw InternalError("Stanley map is not injective at " + pf.to_string());
    }
  }
  std::size_t pf_count = 0;
  for_each_parking_function(n, [&](const std::vector<int>&) { ++pf_count; }, limits);
  if (pf_count != by_pf_.size()) throw InternalError("Stanley map is not onto PF_n");
}

const MaximalChain& StanleyBijection::chain_for(const ParkingFunction& pf) const {
  auto it = by_pf_.find(pf.entries());
  if (it == by_pf_.end()) throw InternalError("no maximal chain carries " + pf.to_string());
  return chains_[it->second];
}

Factorization stanley_inverse(const ParkingFunction& pf, const EnumerationLimits& limits) {
  return StanleyBijection(pf.length(), limits).inverse(pf);
}

}  // namespace ncpark
