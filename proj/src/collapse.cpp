#include "ncpark/collapse.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <unordered_set>

#include "ncpark/errors.hpp"
#include "ncpark/text_format.hpp"

namespace ncpark {

namespace {

class CollapseEngine {
 public:
  CollapseEngine(const SimplicialComplex& x, const SimplicialComplex* target)
      : x_(x), facets_(x.face_count()), cofaces_(x.face_count()), protected_(x.face_count(), 0) {
    for (std::size_t id = 0; id < x.face_count(); ++id) {
      const auto& s = x.face(id);
      if (s.size() < 2) continue;
      for (std::size_t i = 0; i < s.size(); ++i) {
        auto sub = static_cast<std::size_t>(x.index_of(s.without(i)));
        facets_[id].push_back(sub);
        cofaces_[sub].push_back(id);
      }
    }
    if (target) {
      for (const auto& s : target->faces()) protected_[static_cast<std::size_t>(x.index_of(s))] = 1;
      goal_ = target->face_count();
    } else {
      goal_ = 1;
    }
    std::vector<std::size_t> ids(x.face_count());
    std::iota(ids.begin(), ids.end(), 0);
    std::sort(ids.begin(), ids.end(), [&](auto a, auto b) { return x.face(a) < x.face(b); });
    lex_rank_.resize(ids.size());
    for (std::size_t r = 0; r < ids.size(); ++r) lex_rank_[ids[r]] = r;
  }

  std::optional<std::vector<std::pair<std::size_t, std::size_t>>> search(const CollapseOptions& options) {
    reset(lex_rank_);
    if (greedy()) return steps_;
    for (int b = 0; b < options.backtrack_depth && !steps_.empty(); ++b) {
      std::size_t original = steps_.back().first;
      undo();
      const std::size_t prefix = steps_.size();
      std::vector<std::size_t> alternatives;
      for (const auto& [key, id] : free_) {
        if (static_cast<int>(alternatives.size()) >= options.branch_width) break;
        if (id != original) alternatives.push_back(id);
      }
      for (auto id : alternatives) {
        apply(id);
        if (greedy()) return steps_;
        while (steps_.size() > prefix) undo();
      }
    }
    for (int r = 0; r < options.restarts; ++r) {
      std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
                        static_cast<std::uint32_t>(r)};
      std::mt19937_64 rng(seq);
      std::vector<std::uint64_t> priority(x_.face_count());
      for (auto& p : priority) p = rng();
      reset(priority);
      if (greedy()) return steps_;
    }
    return std::nullopt;
  }

 private:
  bool is_free(std::size_t id) const { return alive_[id] && !protected_[id] && live_cofaces_[id] == 1; }

  void refresh(std::size_t id) {
    if (is_free(id))
      free_.emplace(priority_[id], id);
    else
      free_.erase({priority_[id], id});
  }

  std::size_t unique_coface(std::size_t id) const {
    for (auto c : cofaces_[id])
      if (alive_[c]) return c;
    throw InternalError("free face without a live coface");
  }

  void apply(std::size_t sigma) {
    std::size_t tau = unique_coface(sigma);
    alive_[sigma] = alive_[tau] = 0;
    alive_count_ -= 2;
    free_.erase({priority_[sigma], sigma});
    for (auto f : facets_[tau]) {
      --live_cofaces_[f];
      refresh(f);
    }
    for (auto g : facets_[sigma]) {
      --live_cofaces_[g];
      refresh(g);
    }
    steps_.emplace_back(sigma, tau);
  }

  void undo() {
    auto [sigma, tau] = steps_.back();
    steps_.pop_back();
    alive_[sigma] = alive_[tau] = 1;
    alive_count_ += 2;
    for (auto f : facets_[tau]) {
      ++live_cofaces_[f];
      refresh(f);
    }
    for (auto g : facets_[sigma]) {
      ++live_cofaces_[g];
      refresh(g);
    }
    refresh(sigma);
    refresh(tau);
  }

  void reset(const std::vector<std::uint64_t>& priority) {
    priority_ = priority;
    alive_.assign(x_.face_count(), 1);
    alive_count_ = x_.face_count();
    live_cofaces_.resize(x_.face_count());
    for (std::size_t id = 0; id < x_.face_count(); ++id) live_cofaces_[id] = cofaces_[id].size();
    steps_.clear();
    free_.clear();
    for (std::size_t id = 0; id < x_.face_count(); ++id) refresh(id);
  }

  bool greedy() {
    while (alive_count_ > goal_) {
      if (free_.empty()) return false;
      apply(free_.begin()->second);
    }
    return alive_count_ == goal_;
  }

  const SimplicialComplex& x_;
  std::vector<std::vector<std::size_t>> facets_;
  std::vector<std::vector<std::size_t>> cofaces_;
  std::vector<char> protected_;
  std::vector<std::uint64_t> lex_rank_;
  std::size_t goal_ = 1;

  std::vector<std::uint64_t> priority_;
  std::vector<char> alive_;
  std::vector<std::size_t> live_cofaces_;
  std::size_t alive_count_ = 0;
  std::set<std::pair<std::uint64_t, std::size_t>> free_;
  std::vector<std::pair<std::size_t, std::size_t>> steps_;
};

std::optional<CollapseCertificate> run_search(const SimplicialComplex& x, const SimplicialComplex* target,
                                              const CollapseOptions& options) {
  CollapseEngine engine(x, target);
  auto steps = engine.search(options);
  if (!steps) return std::nullopt;
  CollapseCertificate cert;
  cert.start_hash = x.content_hash();
  if (target) cert.target_hash = target->content_hash();
  for (auto [sigma, tau] : *steps) cert.steps.push_back({x.face(sigma), x.face(tau)});
  return cert;
}

std::uint64_t parse_hash(std::string_view text) {
  if (text.size() != 16 || text.find_first_not_of("0123456789abcdef") != std::string_view::npos)
    throw MalformedInput("bad hash '" + std::string(text) + "' in certificate");
  return std::stoull(std::string(text), nullptr, 16);
}

}  // namespace

std::string CollapseCertificate::to_text() const {
  std::ostringstream out;
  out << "# ncpark collapse certificate\n";
  out << "start=" << hex64(start_hash) << "\n";
  out << "target=" << (target_hash ? hex64(*target_hash) : std::string("point")) << "\n";
  out << "steps=" << steps.size() << "\n";
  for (const auto& s : steps) out << "free=" << s.free_face.to_string() << ";coface=" << s.coface.to_string() << "\n";
  return out.str();
}

CollapseCertificate CollapseCertificate::parse(std::string_view text) {
  CollapseCertificate cert;
  bool have_start = false, have_target = false;
  std::optional<std::size_t> declared;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw MalformedInput("certificate line '" + line + "' has no key");
    std::string_view key(line.data(), eq);
    std::string_view value(line.data() + eq + 1, line.size() - eq - 1);
    if (key == "start") {
      cert.start_hash = parse_hash(value);
      have_start = true;
    } else if (key == "target") {
      if (value != "point") cert.target_hash = parse_hash(value);
      have_target = true;
    } else if (key == "steps") {
      declared = std::stoull(std::string(value));
    } else if (key == "free") {
      auto sep = value.find(";coface=");
      if (sep == std::string_view::npos) throw MalformedInput("step line '" + line + "' lacks a coface");
      cert.steps.push_back({Simplex::parse(value.substr(0, sep)), Simplex::parse(value.substr(sep + 8))});
    } else {
      throw MalformedInput("unknown certificate key '" + std::string(key) + "'");
    }
  }
  if (!have_start || !have_target) throw MalformedInput("certificate header is incomplete");
  if (declared && *declared != cert.steps.size()) throw MalformedInput("certificate step count does not match");
  return cert;
}

std::optional<CollapseCertificate> collapse_to_point(const SimplicialComplex& x, const CollapseOptions& options) {
  if (x.empty()) return std::nullopt;
  return run_search(x, nullptr, options);
}

std::optional<CollapseCertificate> collapse_onto(const SimplicialComplex& x, const SimplicialComplex& target,
                                                 const CollapseOptions& options) {
  if (!target.is_subcomplex_of(x)) throw ContractViolation("collapse target is not a subcomplex");
  return run_search(x, &target, options);
}

ReplayResult replay_certificate(const SimplicialComplex& x, const CollapseCertificate& cert,
                                const SimplicialComplex* target) {
  ReplayResult result;
  if (cert.start_hash != x.content_hash()) {
    result.message = "start hash does not match the complex";
    return result;
  }
  if (cert.target_hash.has_value() != (target != nullptr) ||
      (target && *cert.target_hash != target->content_hash())) {
    result.message = "declared target does not match";
    return result;
  }
  std::unordered_set<Simplex, SimplexHash> current(x.faces().begin(), x.faces().end());
  const auto vertices = x.vertices();
  for (const auto& step : cert.steps) {
    const auto& sigma = step.free_face;
    const auto& tau = step.coface;
    auto fail = [&](const std::string& why) {
      result.message = "step " + std::to_string(result.steps_applied + 1) + " (" + sigma.to_string() + " / " +
                       tau.to_string() + "): " + why;
      return result;
    };
    if (!current.count(sigma) || !current.count(tau)) return fail("face not present");
    if (tau.size() != sigma.size() + 1 || !sigma.is_face_of(tau)) return fail("not a codimension-one pair");
    if (target && (target->contains(sigma) || target->contains(tau))) return fail("removes a target face");
    for (Vertex v : vertices) {
      if (sigma.contains(v)) continue;
      auto vs = sigma.vertices();
      vs.push_back(v);
      Simplex up(std::move(vs));
      if (up != tau && current.count(up)) return fail("face is not free");
    }
    current.erase(sigma);
    current.erase(tau);
    ++result.steps_applied;
  }
  if (target) {
    if (current.size() != target->face_count()) {
      result.message = "collapse stops with " + std::to_string(current.size()) + " faces, not the target";
      return result;
    }
  } else if (current.size() != 1) {
    result.message = "collapse stops with " + std::to_string(current.size()) + " faces, not a point";
    return result;
  }
  result.ok = true;
  return result;
}

}  // namespace ncpark
