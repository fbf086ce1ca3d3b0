#pragma once

// Reachability oracle: bounded forward search plus a stack of sound
// unreachability provers, and the product instances that reduce "some pair of
// members is n-equivalent" to reachability.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "vassep/integer.hpp"
#include "vassep/intlin.hpp"
#include "vassep/vas.hpp"

namespace vassep {

struct ReachInstance {
  Vas vas;
  std::vector<Config> targets;

  void validate() const {
    vas.validate();
    for (const auto& t : targets) {
      if (t.dim() != vas.dim) throw DimensionMismatch(vas.dim, t.dim(), "ReachInstance target");
      if (!t.is_nonneg()) throw std::invalid_argument("ReachInstance: negative target");
    }
  }
};

enum class ReachStatus { Found, ProvedEmpty, Unknown };

inline const char* status_name(ReachStatus s) {
  switch (s) {
    case ReachStatus::Found: return "found";
    case ReachStatus::ProvedEmpty: return "proved_empty";
    default: return "unknown";
  }
}

/// A replayable unreachability argument for one target, restricted to a
/// coordinate subset. Projecting onto any subset over-approximates the
/// reachability set, so each prover stays sound on the projection.
struct UnreachProof {
  std::string prover;  // lattice | residue | forward_exhaustion | backward_exhaustion | live_lattice
  std::vector<std::size_t> coords;
  std::int64_t modulus = 0;  // residue
  std::size_t budget = 0;    // exhaustion and coverability budgets
  std::size_t km_budget = 0;  // backward_exhaustion: nonzero when pruned by coverability bounds
};

struct TargetVerdict {
  ReachStatus status = ReachStatus::Unknown;
  std::optional<Run> run;
  std::optional<UnreachProof> proof;
};

struct OracleAnswer {
  ReachStatus status = ReachStatus::Unknown;
  std::optional<Run> run;        // Found
  std::optional<Config> target;  // Found
  std::vector<TargetVerdict> per_target;
  std::size_t explored = 0;
  std::string report;
};

struct ReachBudget {
  std::size_t max_states = 100'000;
  std::size_t backward_states = 20'000;
  std::size_t km_nodes = 20'000;
  std::vector<std::int64_t> moduli{2, 3, 4, 5, 7, 8, 9, 11, 13, 16};
  std::optional<Integer> coord_cap;
};

/// The VAS restricted to a coordinate subset: transitions that touch it,
/// projected. `index[j]` is the original index of the j-th kept transition.
struct Projection {
  std::vector<std::size_t> coords;
  Vas vas;
  std::vector<std::size_t> index;
};

inline Projection project_vas(const Vas& vas, const std::vector<std::size_t>& coords) {
  Projection p;
  p.coords = coords;
  std::vector<IntVector> ts;
  for (std::size_t j = 0; j < vas.transitions.size(); ++j) {
    IntVector t = vas.transitions[j].project(coords);
    if (t.is_zero()) continue;
    ts.push_back(std::move(t));
    p.index.push_back(j);
  }
  p.vas = Vas(coords.size(), vas.source.project(coords), std::move(ts));
  return p;
}

/// Coordinates grouped by the transitions that touch them together.
inline std::vector<std::vector<std::size_t>> coordinate_components(const Vas& vas) {
  std::vector<std::size_t> parent(vas.dim);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& t : vas.transitions) {
    auto s = support(t);
    for (std::size_t i = 1; i < s.size(); ++i) parent[find(s[i])] = find(s[0]);
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < vas.dim; ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, g] : groups) out.push_back(std::move(g));
  return out;
}

/// Breadth-first exploration with parent pointers.
class Exploration {
 public:
  Exploration(const Vas& vas, std::size_t budget, std::optional<Integer> cap) {
    nodes_.push_back({vas.source, 0, 0});
    seen_.emplace(vas.source, 0);
    std::size_t head = 0;
    for (; head < nodes_.size(); ++head) {
      for (std::size_t j = 0; j < vas.transitions.size(); ++j) {
        Config next = nodes_[head].config + vas.transitions[j];
        if (!next.is_nonneg()) continue;
        if (cap && std::any_of(next.begin(), next.end(), [&](const Integer& x) { return x > *cap; })) {
          capped_ = true;
          continue;
        }
        if (seen_.count(next)) continue;
        if (nodes_.size() >= budget) return;
        seen_.emplace(next, nodes_.size());
        nodes_.push_back({std::move(next), head, j});
      }
    }
    exhausted_ = true;
  }

  /// True when every reachable configuration has been visited.
  bool complete() const { return exhausted_ && !capped_; }
  std::size_t size() const { return nodes_.size(); }
  bool contains(const Config& c) const { return seen_.count(c) > 0; }
  template <class Fn>
  void for_each_config(Fn&& fn) const {
    for (const auto& n : nodes_) fn(static_cast<const Config&>(n.config));
  }

  std::optional<std::vector<std::size_t>> labels_to(const Config& c) const {
    auto it = seen_.find(c);
    if (it == seen_.end()) return std::nullopt;
    std::vector<std::size_t> labels;
    for (std::size_t i = it->second; i != 0; i = nodes_[i].parent) labels.push_back(nodes_[i].via);
    std::reverse(labels.begin(), labels.end());
    return labels;
  }

 private:
  struct Node {
    Config config;
    std::size_t parent;
    std::size_t via;
  };
  std::vector<Node> nodes_;
  std::unordered_map<Config, std::size_t, IntVectorHash> seen_;
  bool exhausted_ = false;
  bool capped_ = false;
};

inline OracleAnswer forward_search(const ReachInstance& inst, std::size_t budget,
                                   std::optional<Integer> cap = std::nullopt) {
  inst.validate();
  if (budget < 1) throw std::invalid_argument("forward_search: budget must be >= 1");
  Exploration ex(inst.vas, budget, cap);
  OracleAnswer ans;
  ans.explored = ex.size();
  for (const auto& t : inst.targets) {
    TargetVerdict tv;
    if (auto labels = ex.labels_to(t)) {
      tv.status = ReachStatus::Found;
      tv.run = replay(inst.vas, *labels);
      if (!ans.run) {
        ans.run = tv.run;
        ans.target = t;
      }
    } else if (ex.complete()) {
      tv.status = ReachStatus::ProvedEmpty;
      tv.proof = UnreachProof{"forward_exhaustion", {}, 0, budget};
      for (std::size_t i = 0; i < inst.vas.dim; ++i) tv.proof->coords.push_back(i);
    }
    ans.per_target.push_back(std::move(tv));
  }
  if (ans.run)
    ans.status = ReachStatus::Found;
  else if (ex.complete())
    ans.status = ReachStatus::ProvedEmpty;
  ans.report = "explored " + std::to_string(ex.size()) + " configurations" +
               (ex.complete() ? " (complete)" : " (incomplete)");
  return ans;
}

/// True when every configuration that can reach `target` was visited without
/// meeting `source`. With `bounds`, configurations exceeding a finite bound
/// are skipped: they are not reachable, so no run passes through them.
inline bool backward_exhausts_without(const Vas& vas, const Config& target, const Config& source,
                                      std::size_t budget,
                                      const std::vector<std::optional<Integer>>* bounds = nullptr) {
  auto within = [&](const Config& c) {
    if (!bounds) return true;
    for (std::size_t i = 0; i < c.dim(); ++i)
      if ((*bounds)[i] && c[i] > *(*bounds)[i]) return false;
    return true;
  };
  if (!within(target)) return true;
  std::unordered_set<Config, IntVectorHash> seen{target};
  std::vector<Config> queue{target};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    if (queue[head] == source) return false;
    for (const auto& t : vas.transitions) {
      Config prev = queue[head] - t;
      if (!prev.is_nonneg() || !within(prev) || seen.count(prev)) continue;
      if (seen.size() >= budget) return false;
      seen.insert(prev);
      queue.push_back(std::move(prev));
    }
  }
  return true;
}

/// What a Karp-Miller coverability tree shows: the transitions enabled at
/// some node, and per coordinate the largest value seen (nullopt where the
/// coordinate is unbounded). Every reachable configuration is covered by a
/// node, so both over-approximate the reachable behaviour.
struct Coverability {
  std::vector<bool> live;
  std::vector<std::optional<Integer>> bound;
};

/// nullopt when the tree exceeds `budget` nodes.
inline std::optional<Coverability> coverability(const Vas& vas, std::size_t budget) {
  // omega is encoded as -1
  using Label = std::vector<Integer>;
  struct Node {
    Label label;
    std::ptrdiff_t parent;
  };
  auto is_omega = [](const Integer& x) { return x < 0; };
  std::vector<Node> nodes{{vas.source.entries(), -1}};
  std::set<Label> seen{nodes[0].label};
  std::vector<bool> live(vas.transitions.size(), false);
  std::vector<std::optional<Integer>> bound(vas.source.begin(), vas.source.end());
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    std::size_t cur = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < vas.transitions.size(); ++j) {
      const auto& t = vas.transitions[j];
      Label next = nodes[cur].label;
      bool ok = true;
      for (std::size_t i = 0; i < vas.dim; ++i) {
        if (is_omega(next[i])) continue;
        next[i] += t[i];
        if (next[i] < 0) ok = false;
      }
      if (!ok) continue;
      live[j] = true;
      // accelerate against strictly smaller ancestors
      for (std::ptrdiff_t a = static_cast<std::ptrdiff_t>(cur); a >= 0; a = nodes[static_cast<std::size_t>(a)].parent) {
        const Label& anc = nodes[static_cast<std::size_t>(a)].label;
        bool leq = true, strict = false;
        for (std::size_t i = 0; i < vas.dim && leq; ++i) {
          if (is_omega(next[i])) continue;
          if (is_omega(anc[i]) || anc[i] > next[i]) leq = false;
          else if (anc[i] < next[i]) strict = true;
        }
        if (leq && strict)
          for (std::size_t i = 0; i < vas.dim; ++i)
            if (!is_omega(next[i]) && anc[i] < next[i]) next[i] = -1;
      }
      for (std::size_t i = 0; i < vas.dim; ++i)
        if (bound[i] && (is_omega(next[i]) || next[i] > *bound[i]))
          bound[i] = is_omega(next[i]) ? std::nullopt : std::optional<Integer>(next[i]);
      if (!seen.insert(next).second) continue;
      if (nodes.size() >= budget) return std::nullopt;
      nodes.push_back({std::move(next), static_cast<std::ptrdiff_t>(cur)});
      stack.push_back(nodes.size() - 1);
    }
  }
  return Coverability{std::move(live), std::move(bound)};
}

/// Transitions enabled somewhere in the coverability tree: every transition
/// that can fire in a reachable configuration is reported.
inline std::optional<std::vector<bool>> live_transitions(const Vas& vas, std::size_t budget) {
  auto c = coverability(vas, budget);
  if (!c) return std::nullopt;
  return std::move(c->live);
}

namespace detail {

inline bool lattice_refutes(const Vas& vas, const Config& target) {
  return !lattice_member(target - vas.source, IntMatrix(vas.dim, vas.transitions)).has_value();
}

inline bool residue_refutes(const Vas& vas, const Config& target, std::int64_t m) {
  return !mod_lattice_member(target - vas.source, IntMatrix(vas.dim, vas.transitions), m);
}

inline Vas only_live(const Vas& vas, const std::vector<bool>& live) {
  std::vector<IntVector> ts;
  for (std::size_t j = 0; j < vas.transitions.size(); ++j)
    if (live[j]) ts.push_back(vas.transitions[j]);
  return Vas(vas.dim, vas.source, std::move(ts));
}

}  // namespace detail

/// Re-runs one recorded proof from scratch.
inline bool check_unreach_proof(const Vas& vas, const Config& target, const UnreachProof& p) {
  try {
    for (auto c : p.coords)
      if (c >= vas.dim) return false;
    if (p.coords.empty()) return false;
    auto proj = project_vas(vas, p.coords);
    Config t = target.project(p.coords);
    if (p.prover == "lattice") return detail::lattice_refutes(proj.vas, t);
    if (p.prover == "residue") return p.modulus >= 2 && detail::residue_refutes(proj.vas, t, p.modulus);
    if (p.prover == "forward_exhaustion") {
      Exploration ex(proj.vas, p.budget, std::nullopt);
      return ex.complete() && !ex.contains(t);
    }
    if (p.prover == "backward_exhaustion") {
      if (p.km_budget == 0) return backward_exhausts_without(proj.vas, t, proj.vas.source, p.budget);
      auto cov = coverability(proj.vas, p.km_budget);
      return cov && backward_exhausts_without(proj.vas, t, proj.vas.source, p.budget, &cov->bound);
    }
    if (p.prover == "live_lattice") {
      auto live = live_transitions(proj.vas, p.budget);
      return live && detail::lattice_refutes(detail::only_live(proj.vas, *live), t);
    }
    if (p.prover == "live_residue") {
      auto live = live_transitions(proj.vas, p.budget);
      return live && p.modulus >= 2 && detail::residue_refutes(detail::only_live(proj.vas, *live), t, p.modulus);
    }
  } catch (const std::exception&) {
  }
  return false;
}

/// Answers reachability for many targets, sharing work per component.
class ReachOracle {
 public:
  ReachOracle(Vas vas, ReachBudget budget) : vas_(std::move(vas)), budget_(std::move(budget)) {
    vas_.validate();
    for (auto& coords : coordinate_components(vas_)) comps_.push_back(Component{project_vas(vas_, coords)});
  }

  const Vas& vas() const { return vas_; }

  TargetVerdict solve(const Config& target) {
    if (target.dim() != vas_.dim) throw DimensionMismatch(vas_.dim, target.dim(), "ReachOracle::solve");
    TargetVerdict v;
    if (!target.is_nonneg()) throw std::invalid_argument("ReachOracle: negative target");
    std::vector<std::vector<std::size_t>> runs;
    bool all_found = true;
    for (auto& c : comps_) {
      Config t = target.project(c.proj.coords);
      if (auto p = prove(c, t)) {
        v.status = ReachStatus::ProvedEmpty;
        v.proof = std::move(p);
        return v;
      }
      auto& ex = exploration(c);
      auto labels = ex.labels_to(t);
      if (!labels) {
        all_found = false;
        continue;
      }
      std::vector<std::size_t> mapped;
      for (auto l : *labels) mapped.push_back(c.proj.index[l]);
      runs.push_back(std::move(mapped));
    }
    if (all_found) {
      std::vector<std::size_t> labels;
      for (auto& r : runs) labels.insert(labels.end(), r.begin(), r.end());
      v.status = ReachStatus::Found;
      v.run = replay(vas_, labels);
    }
    return v;
  }

  OracleAnswer solve_all(const std::vector<Config>& targets) {
    OracleAnswer ans;
    bool all_empty = true;
    for (const auto& t : targets) {
      auto v = solve(t);
      if (v.status == ReachStatus::Found && !ans.run) {
        ans.run = v.run;
        ans.target = t;
      }
      if (v.status != ReachStatus::ProvedEmpty) all_empty = false;
      ans.per_target.push_back(std::move(v));
    }
    ans.status = ans.run ? ReachStatus::Found : (all_empty ? ReachStatus::ProvedEmpty : ReachStatus::Unknown);
    for (auto& c : comps_)
      if (c.explored) ans.explored += c.explored->size();
    ans.report = std::to_string(comps_.size()) + " components, " + std::to_string(ans.explored) +
                 " configurations explored";
    return ans;
  }

 private:
  struct Component {
    Projection proj;
    std::unique_ptr<Exploration> explored;
    std::optional<std::optional<Coverability>> cov;
    std::map<std::int64_t, LatticeBasis> residues;
    std::map<std::int64_t, LatticeBasis> live_residues;
    std::optional<LatticeBasis> lattice;
    std::optional<LatticeBasis> live_lattice;
  };

  Exploration& exploration(Component& c) {
    if (!c.explored) c.explored = std::make_unique<Exploration>(c.proj.vas, budget_.max_states, budget_.coord_cap);
    return *c.explored;
  }

  // Lin(T) + mZ^d as a cached basis; membership is then one solve per target
  static bool outside_subgroup(std::map<std::int64_t, LatticeBasis>& cache, const Vas& v, const IntVector& diff,
                               std::int64_t m) {
    auto it = cache.find(m);
    if (it == cache.end()) {
      IntMatrix aug(v.dim, v.transitions);
      for (std::size_t i = 0; i < v.dim; ++i) aug.add_column(IntVector::unit(v.dim, i, m));
      it = cache.emplace(m, hnf(aug)).first;
    }
    return !solve_in_basis(diff, it->second).has_value();
  }

  std::optional<UnreachProof> prove(Component& c, const Config& t) {
    const Vas& v = c.proj.vas;
    auto mk = [&](const char* name, std::int64_t m = 0, std::size_t b = 0) {
      return UnreachProof{name, c.proj.coords, m, b};
    };
    const IntVector diff = t - v.source;
    if (!c.lattice) c.lattice = hnf(IntMatrix(v.dim, v.transitions));
    if (!solve_in_basis(diff, *c.lattice)) return mk("lattice");
    for (auto m : budget_.moduli)
      if (outside_subgroup(c.residues, v, diff, m)) return mk("residue", m);
    auto& ex = exploration(c);
    if (ex.contains(t)) return std::nullopt;
    if (ex.complete()) return mk("forward_exhaustion", 0, budget_.max_states);
    if (!c.cov) c.cov = coverability(v, budget_.km_nodes);
    if (*c.cov) {
      Vas lv = detail::only_live(v, (*c.cov)->live);
      if (!c.live_lattice) c.live_lattice = hnf(IntMatrix(lv.dim, lv.transitions));
      if (!solve_in_basis(diff, *c.live_lattice)) return mk("live_lattice", 0, budget_.km_nodes);
      for (auto m : budget_.moduli)
        if (outside_subgroup(c.live_residues, lv, diff, m)) return mk("live_residue", m, budget_.km_nodes);
      if (backward_exhausts_without(v, t, v.source, budget_.backward_states, &(*c.cov)->bound)) {
        auto p = mk("backward_exhaustion", 0, budget_.backward_states);
        p.km_budget = budget_.km_nodes;
        return p;
      }
    } else if (backward_exhausts_without(v, t, v.source, budget_.backward_states)) {
      return mk("backward_exhaustion", 0, budget_.backward_states);
    }
    return std::nullopt;
  }

  Vas vas_;
  ReachBudget budget_;
  std::vector<Component> comps_;
};

/// Per-target unreachability proofs (nullopt where no prover succeeds).
inline std::vector<std::optional<UnreachProof>> prove_unreach(const ReachInstance& inst,
                                                              const ReachBudget& budget = {}) {
  inst.validate();
  ReachOracle oracle(inst.vas, budget);
  std::vector<std::optional<UnreachProof>> out;
  for (const auto& t : inst.targets) {
    auto v = oracle.solve(t);
    out.push_back(v.status == ReachStatus::ProvedEmpty ? v.proof : std::nullopt);
  }
  return out;
}

namespace detail {

/// Both systems side by side: coordinates [0, D) run u, [D, 2D) run v.
inline std::vector<IntVector> product_transitions(const NormalizedPair& p, std::size_t dim) {
  const std::size_t d = p.dim();
  std::vector<IntVector> ts;
  for (const auto& t : p.u.transitions) {
    IntVector w(dim);
    for (std::size_t i = 0; i < d; ++i) w[i] = t[i];
    ts.push_back(std::move(w));
  }
  for (const auto& t : p.v.transitions) {
    IntVector w(dim);
    for (std::size_t i = 0; i < d; ++i) w[d + i] = t[i];
    ts.push_back(std::move(w));
  }
  return ts;
}

inline double power(std::int64_t base, std::size_t exp) {
  double r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= static_cast<double>(base);
  return r;
}

/// Calls fn on every w in [0, bound)^k.
template <class Fn>
void for_each_residue(std::size_t k, std::int64_t bound, Fn&& fn) {
  Residue w(k, 0);
  while (true) {
    fn(static_cast<const Residue&>(w));
    std::size_t i = 0;
    for (; i < k; ++i) {
      if (++w[i] < bound) break;
      w[i] = 0;
    }
    if (i == k) return;
  }
}

}  // namespace detail

/// The pair's product with an unguarded "-n" on every kept coordinate of
/// both sides. A target (w, w), w in [0,n)^k and zero elsewhere, is reachable
/// iff some u in U' and v in V' are congruent mod n with residue w.
inline ReachInstance modpair_instance(const NormalizedPair& p, std::int64_t n, std::size_t max_targets = 100'000) {
  require_modulus(n, "modpair_instance");
  const std::size_t d = p.dim(), k = p.kept, dim = 2 * d;
  if (detail::power(n, k) > static_cast<double>(max_targets))
    throw BudgetExceeded("modpair_instance: n^k targets exceed budget");
  std::vector<IntVector> ts = detail::product_transitions(p, dim);
  for (std::size_t side = 0; side < 2; ++side)
    for (std::size_t i = 0; i < k; ++i) ts.push_back(IntVector::unit(dim, side * d + i, -n));
  Config src(dim);
  for (std::size_t i = 0; i < d; ++i) {
    src[i] = p.u.source[i];
    src[d + i] = p.v.source[i];
  }
  ReachInstance inst{Vas(dim, std::move(src), std::move(ts)), {}};
  detail::for_each_residue(k, n, [&](const Residue& w) {
    Config t(dim);
    for (std::size_t i = 0; i < k; ++i) t[i] = t[d + i] = w[i];
    inst.targets.push_back(std::move(t));
  });
  return inst;
}

namespace detail {

/// One side of the unary instance: the system runs in state "run", then moves
/// for good to "dec", where a kept coordinate may drop by n while it is at
/// least 2n (take 2n into an auxiliary state, give n back). Keeping the
/// decrements out of the run matters: a guard checked mid-run would let the
/// run continue from a value the final configuration never had.
inline SectionedVas unary_block(const Vas& v, std::size_t k, std::int64_t n) {
  Vass w;
  w.dim = v.dim;
  w.states = {"run", "dec"};
  for (std::size_t i = 0; i < k; ++i) w.states.push_back("aux" + std::to_string(i));
  w.source = v.source;
  for (const auto& t : v.transitions) w.transitions.push_back({0, t, 0});
  w.transitions.push_back({0, IntVector(v.dim), 1});
  for (std::size_t i = 0; i < k; ++i) {
    w.transitions.push_back({1, IntVector::unit(v.dim, i, -2 * n), 2 + i});
    w.transitions.push_back({2 + i, IntVector::unit(v.dim, i, n), 1});
  }
  return vass_to_vas(w, 1);
}

}  // namespace detail

/// Like modpair_instance, with the n-unary threshold respected: each side is
/// a compiled control-state system whose final phase lowers kept coordinates
/// by n only while they are at least 2n. Targets put both sides on the same
/// canonical vector (values in [0, 2n)) with the compiled control in its
/// final state; u and v meet one iff u and v are n-unary equivalent.
inline ReachInstance unarypair_instance(const NormalizedPair& p, std::int64_t n, std::size_t max_targets = 100'000) {
  require_modulus(n, "unarypair_instance");
  const std::size_t k = p.kept;
  if (detail::power(2 * n, k) > static_cast<double>(max_targets))
    throw BudgetExceeded("unarypair_instance: (2n)^k targets exceed budget");
  const SectionedVas bu = detail::unary_block(p.u, k, n), bv = detail::unary_block(p.v, k, n);
  const std::size_t du = bu.vas.dim, dim = du + bv.vas.dim;
  std::vector<IntVector> ts;
  Config src(dim);
  for (std::size_t side = 0; side < 2; ++side) {
    const Vas& b = side == 0 ? bu.vas : bv.vas;
    const std::size_t off = side == 0 ? 0 : du;
    for (std::size_t i = 0; i < b.dim; ++i) src[off + i] = b.source[i];
    for (const auto& t : b.transitions) {
      IntVector w(dim);
      for (std::size_t i = 0; i < b.dim; ++i) w[off + i] = t[i];
      ts.push_back(std::move(w));
    }
  }
  ReachInstance inst{Vas(dim, std::move(src), std::move(ts)), {}};
  detail::for_each_residue(k, 2 * n, [&](const Residue& w) {
    Config t(dim);
    for (std::size_t side = 0; side < 2; ++side) {
      const SectionedVas& b = side == 0 ? bu : bv;
      const std::size_t off = side == 0 ? 0 : du;
      for (std::size_t i = 0; i < k; ++i) t[off + i] = w[i];
      for (const auto& [i, x] : b.section.fixed) t[off + i] = x;
    }
    inst.targets.push_back(std::move(t));
  });
  return inst;
}

/// Canonical representative of the n-unary class of x: values below n stay,
/// larger ones land in [n, 2n).
inline Integer unary_canonical(const Integer& x, std::int64_t n) {
  if (x < 2 * n) return x;
  return n + mod_floor(x, Integer(n));
}

/// One side's canonical form as produced by the guarded gadget: drop by n
/// while at least 2n.
inline Integer gadget_normal_form(Integer x, std::int64_t n) {
  while (x >= 2 * n) x -= n;
  return x;
}

}  // namespace vassep
