#include "ncpark/homology.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "ncpark/errors.hpp"

namespace ncpark {

namespace {

struct Overflow {};

std::int64_t sub_mul(std::int64_t a, std::int64_t q, std::int64_t b) {
  std::int64_t prod = 0;
  std::int64_t out = 0;
  if (__builtin_mul_overflow(q, b, &prod) || __builtin_sub_overflow(a, prod, &out) ||
      out == std::numeric_limits<std::int64_t>::min())
    throw Overflow{};
  return out;
}
mpz_class sub_mul(const mpz_class& a, const mpz_class& q, const mpz_class& b) { return a - q * b; }

std::int64_t magnitude(std::int64_t a) { return a < 0 ? -a : a; }
mpz_class magnitude(const mpz_class& a) { return abs(a); }

mpz_class to_mpz(std::int64_t a) { return mpz_class(std::to_string(a)); }
mpz_class to_mpz(const mpz_class& a) { return a; }

template <class T>
class Eliminator {
 public:
  using Row = std::vector<std::pair<std::size_t, T>>;

  explicit Eliminator(const IntMatrix& m) : rows_(m.rows), col_rows_(m.cols), alive_(m.rows, 1) {
    auto entries = m.entries;
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return std::tie(a.row, a.col) < std::tie(b.row, b.col); });
    for (const auto& e : entries) {
      if (e.row >= m.rows || e.col >= m.cols) throw ContractViolation("matrix entry out of range");
      if (e.value == 0) continue;
      auto& row = rows_[e.row];
      if (!row.empty() && row.back().first == e.col)
        throw ContractViolation("duplicate matrix entry");
      row.emplace_back(e.col, T(e.value));
      col_rows_[e.col].insert(e.row);
    }
  }

  SmithInvariants run() {
    SmithInvariants out;
    std::vector<T> diagonal;
    unit_phase(out.rank);
    while (true) {
      auto [r, c, found] = smallest_entry();
      if (!found) break;
      diagonal.push_back(isolate(r, c));
      ++out.rank;
      unit_phase(out.rank);
    }
    std::vector<mpz_class> d;
    for (const auto& v : diagonal) d.push_back(to_mpz(magnitude(v)));
    for (std::size_t i = 0; i < d.size(); ++i)
      for (std::size_t j = i + 1; j < d.size(); ++j) {
        mpz_class g = gcd(d[i], d[j]);
        mpz_class l = lcm(d[i], d[j]);
        d[i] = g;
        d[j] = l;
      }
    for (auto& v : d)
      if (v > 1) out.torsion.push_back(v);
    return out;
  }

 private:
  const T* find(std::size_t r, std::size_t c) const {
    const auto& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, std::size_t col) { return e.first < col; });
    return it != row.end() && it->first == c ? &it->second : nullptr;
  }

  // rows_[target] -= q * rows_[source]
  void row_axpy(std::size_t target, const T& q, std::size_t source) {
    Row merged;
    const auto& a = rows_[target];
    const auto& b = rows_[source];
    merged.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        merged.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        T v = sub_mul(T(0), q, b[j].second);
        col_rows_[b[j].first].insert(target);
        merged.emplace_back(b[j++].first, std::move(v));
      } else {
        T v = sub_mul(a[i].second, q, b[j].second);
        if (v == 0)
          col_rows_[a[i].first].erase(target);
        else
          merged.emplace_back(a[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    rows_[target] = std::move(merged);
  }

  void kill_row(std::size_t r) {
    for (const auto& [c, v] : rows_[r]) col_rows_[c].erase(r);
    rows_[r].clear();
    alive_[r] = 0;
  }

  void unit_phase(std::size_t& rank) {
    bool progress = true;
    while (progress) {
      progress = false;
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (!alive_[r] || rows_[r].empty()) continue;
        std::size_t best = rows_[r].size();
        for (std::size_t k = 0; k < rows_[r].size(); ++k) {
          const auto& [c, v] = rows_[r][k];
          if (magnitude(v) != 1) continue;
          if (best == rows_[r].size() || col_rows_[c].size() < col_rows_[rows_[r][best].first].size()) best = k;
        }
        if (best == rows_[r].size()) continue;
        auto [c, p] = rows_[r][best];
        std::vector<std::size_t> others(col_rows_[c].begin(), col_rows_[c].end());
        for (auto i : others)
          if (i != r) row_axpy(i, T(*find(i, c) * p), r);
        kill_row(r);
        ++rank;
        progress = true;
      }
    }
  }

  std::tuple<std::size_t, std::size_t, bool> smallest_entry() const {
    std::tuple<std::size_t, std::size_t, bool> best{0, 0, false};
    T best_value = 0;
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (const auto& [c, v] : rows_[r])
        if (!std::get<2>(best) || magnitude(v) < best_value) {
          best = {r, c, true};
          best_value = magnitude(v);
        }
    return best;
  }

  // Clears row r and column c around the pivot, moving the pivot to smaller
  // remainders as they appear. Returns the final pivot value.
  T isolate(std::size_t r, std::size_t c) {
    while (true) {
      T p = *find(r, c);
      bool moved = false;
      std::vector<std::size_t> others(col_rows_[c].begin(), col_rows_[c].end());
      for (auto i : others) {
        if (i == r) continue;
        T q = *find(i, c) / p;
        if (q != 0) row_axpy(i, q, r);
        if (find(i, c)) {
          r = i;
          moved = true;
          break;
        }
      }
      if (moved) continue;
      // Column c now holds only the pivot; column operations touch row r alone.
      auto& row = rows_[r];
      for (std::size_t k = 0; k < row.size(); ++k) {
        auto j = row[k].first;
        if (j == c) continue;
        T rem = sub_mul(row[k].second, T(row[k].second / p), p);
        if (rem == 0) {
          col_rows_[j].erase(r);
          row.erase(row.begin() + static_cast<std::ptrdiff_t>(k));
          --k;
          continue;
        }
        row[k].second = rem;
        c = j;
        moved = true;
        break;
      }
      if (moved) continue;
      kill_row(r);
      return p;
    }
  }

  std::vector<Row> rows_;
  std::vector<std::set<std::size_t>> col_rows_;
  std::vector<char> alive_;
};

// Ids of the first face of each dimension, plus a final sentinel.
std::vector<std::size_t> dimension_offsets(const SimplicialComplex& x) {
  std::vector<std::size_t> offsets{0};
  for (auto f : x.f_vector()) offsets.push_back(offsets.back() + f);
  return offsets;
}

}  // namespace

SmithInvariants smith_invariants(const IntMatrix& m) {
  try {
    return Eliminator<std::int64_t>(m).run();
  } catch (const Overflow&) {
    auto out = Eliminator<mpz_class>(m).run();
    out.used_big_integers = true;
    return out;
  }
}

IntMatrix boundary_matrix(const SimplicialComplex& x, int d) {
  auto offsets = dimension_offsets(x);
  const int top = x.dimension();
  IntMatrix m;
  if (d < 0 || d > top) return m;
  m.cols = offsets[d + 1] - offsets[d];
  if (d == 0) {
    m.rows = 1;
    for (std::size_t i = 0; i < m.cols; ++i) m.entries.push_back({0, i, 1});
    return m;
  }
  m.rows = offsets[d] - offsets[d - 1];
  for (std::size_t id = offsets[d]; id < offsets[d + 1]; ++id) {
    const auto& s = x.face(id);
    for (std::size_t i = 0; i < s.size(); ++i) {
      auto sub = x.index_of(s.without(i));
      if (sub < 0) throw InternalError("complex is not closed under faces");
      m.entries.push_back({static_cast<std::size_t>(sub) - offsets[d - 1], id - offsets[d], i % 2 == 0 ? 1 : -1});
    }
  }
  return m;
}

long euler_characteristic(const SimplicialComplex& x) {
  long chi = 0;
  auto f = x.f_vector();
  for (std::size_t d = 0; d < f.size(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(f[d]);
  return chi;
}

std::size_t HomologyProfile::betti_at(int d) const {
  auto i = static_cast<std::size_t>(d + 1);
  return d >= -1 && i < betti.size() ? betti[i] : 0;
}

const std::vector<mpz_class>& HomologyProfile::torsion_at(int d) const {
  static const std::vector<mpz_class> none;
  auto i = static_cast<std::size_t>(d + 1);
  return d >= -1 && i < torsion.size() ? torsion[i] : none;
}

bool HomologyProfile::is_trivial() const {
  for (std::size_t i = 0; i < betti.size(); ++i)
    if (betti[i] != 0 || !torsion[i].empty()) return false;
  return true;
}

long HomologyProfile::alternating_betti_sum() const {
  long total = 0;
  for (std::size_t i = 0; i < betti.size(); ++i) {
    long d = static_cast<long>(i) - 1;
    total += (d % 2 == 0 ? 1 : -1) * static_cast<long>(betti[i]);
  }
  return total;
}

std::string HomologyProfile::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < betti.size(); ++i) {
    if (betti[i] == 0 && torsion[i].empty()) continue;
    std::string group;
    if (betti[i] > 0) group = betti[i] == 1 ? "Z" : "Z^" + std::to_string(betti[i]);
    for (const auto& t : torsion[i]) group += (group.empty() ? "" : " + ") + std::string("Z/") + t.get_str();
    out += "H~" + std::to_string(static_cast<long>(i) - 1) + " = " + group + "\n";
  }
  return out.empty() ? "trivial\n" : out;
}

HomologyProfile reduced_homology(const SimplicialComplex& x, const EnumerationLimits& limits) {
  if (x.face_count() > limits.max_faces) throw ResourceLimit("complex exceeds the homology face cap");
  HomologyProfile h;
  h.euler_characteristic = euler_characteristic(x);
  const int top = x.dimension();
  auto f = x.f_vector();
  // Chain ranks c[d + 1] for d = -1..top.
  std::vector<std::size_t> c{1};
  for (auto v : f) c.push_back(v);
  std::vector<SmithInvariants> snf;  // snf[d] is the d-th boundary map, d = 0..top
  for (int d = 0; d <= top; ++d) {
    snf.push_back(smith_invariants(boundary_matrix(x, d)));
    h.boundary_ranks.push_back(snf.back().rank);
  }
  for (int d = -1; d <= top; ++d) {
    std::size_t rank_out = d >= 0 ? snf[static_cast<std::size_t>(d)].rank : 0;
    std::size_t rank_in = d + 1 <= top ? snf[static_cast<std::size_t>(d + 1)].rank : 0;
    h.betti.push_back(c[static_cast<std::size_t>(d + 1)] - rank_out - rank_in);
    h.torsion.push_back(d + 1 <= top ? snf[static_cast<std::size_t>(d + 1)].torsion : std::vector<mpz_class>{});
  }
  return h;
}

}  // namespace ncpark
