#pragma once

// Vector addition systems (with states), runs, the run embedding order,
// pumping, sections and the model translations between them.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vassep/integer.hpp"

namespace vassep {

class InvalidRun : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Vas {
  std::size_t dim = 0;
  Config source;
  std::vector<IntVector> transitions;

  Vas() = default;
  Vas(std::size_t d, Config s, std::vector<IntVector> ts) : dim(d), source(std::move(s)), transitions(std::move(ts)) {
    validate();
  }

  void validate() const {
    if (source.dim() != dim) throw DimensionMismatch(dim, source.dim(), "Vas source");
    if (!source.is_nonneg()) throw std::invalid_argument("Vas: source has a negative entry");
    for (const auto& t : transitions)
      if (t.dim() != dim) throw DimensionMismatch(dim, t.dim(), "Vas transition");
  }
};

struct VassTransition {
  std::size_t from = 0;
  IntVector delta;
  std::size_t to = 0;
};

struct Vass {
  std::size_t dim = 0;
  std::vector<std::string> states;
  std::size_t initial = 0;
  Config source;
  std::vector<VassTransition> transitions;

  void validate() const {
    if (states.empty()) throw std::invalid_argument("Vass: no states");
    if (initial >= states.size()) throw std::invalid_argument("Vass: initial state out of range");
    if (source.dim() != dim) throw DimensionMismatch(dim, source.dim(), "Vass source");
    if (!source.is_nonneg()) throw std::invalid_argument("Vass: source has a negative entry");
    for (const auto& t : transitions) {
      if (t.from >= states.size() || t.to >= states.size())
        throw std::invalid_argument("Vass: transition references an unknown state");
      if (t.delta.dim() != dim) throw DimensionMismatch(dim, t.delta.dim(), "Vass transition");
    }
  }

  std::size_t state_index(const std::string& name) const {
    auto it = std::find(states.begin(), states.end(), name);
    if (it == states.end()) throw std::invalid_argument("Vass: unknown state '" + name + "'");
    return static_cast<std::size_t>(it - states.begin());
  }
};

struct Step {
  Config from;
  std::size_t transition = 0;
  Config to;
};

/// A run with every intermediate configuration stored.
struct Run {
  Config source;
  std::vector<Step> steps;

  const Config& target() const { return steps.empty() ? source : steps.back().to; }
  std::size_t size() const { return steps.size(); }
  std::vector<std::size_t> labels() const {
    std::vector<std::size_t> out;
    for (const auto& s : steps) out.push_back(s.transition);
    return out;
  }
};

/// Fires `labels` from the source of `vas`.
inline Run replay(const Vas& vas, const std::vector<std::size_t>& labels) {
  Run r{vas.source, {}};
  Config cur = vas.source;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] >= vas.transitions.size())
      throw InvalidRun("step " + std::to_string(i) + ": no transition with index " + std::to_string(labels[i]));
    Config next = cur + vas.transitions[labels[i]];
    if (!next.is_nonneg())
      throw InvalidRun("step " + std::to_string(i) + ": transition " + std::to_string(labels[i]) + " from " +
                       cur.str() + " leaves N^d");
    r.steps.push_back({cur, labels[i], next});
    cur = std::move(next);
  }
  return r;
}

/// Checks every run condition on a fully spelled-out candidate.
inline Run validate_run(const Vas& vas, const Run& candidate) {
  if (candidate.source != vas.source)
    throw InvalidRun("run source " + candidate.source.str() + " differs from system source " + vas.source.str());
  Config cur = candidate.source;
  for (std::size_t i = 0; i < candidate.steps.size(); ++i) {
    const Step& s = candidate.steps[i];
    const std::string at = "step " + std::to_string(i) + ": ";
    if (s.transition >= vas.transitions.size()) throw InvalidRun(at + "unknown transition");
    if (s.from != cur) throw InvalidRun(at + "does not continue from " + cur.str());
    if (!s.from.is_nonneg() || !s.to.is_nonneg()) throw InvalidRun(at + "configuration leaves N^d");
    if (s.from + vas.transitions[s.transition] != s.to) throw InvalidRun(at + "effect does not match transition");
    cur = s.to;
  }
  return candidate;
}

inline bool is_valid_run(const Vas& vas, const Run& r) {
  try {
    validate_run(vas, r);
    return true;
  } catch (const InvalidRun&) {
    return false;
  }
}

/// Indices of sigma's steps matching rho's steps in order (same transition,
/// both configurations dominated), or nullopt. Greedy leftmost matching is
/// complete for subsequence embeddings.
inline std::optional<std::vector<std::size_t>> find_embedding(const Run& rho, const Run& sigma) {
  std::vector<std::size_t> idx;
  std::size_t j = 0;
  for (const auto& s : rho.steps) {
    while (j < sigma.steps.size()) {
      const Step& t = sigma.steps[j];
      if (t.transition == s.transition && s.from.leq(t.from) && s.to.leq(t.to)) break;
      ++j;
    }
    if (j == sigma.steps.size()) return std::nullopt;
    idx.push_back(j++);
  }
  return idx;
}

inline bool run_embeds(const Run& rho, const Run& sigma) {
  if (rho.source.dim() != sigma.source.dim()) return false;
  return rho.target().leq(sigma.target()) && find_embedding(rho, sigma).has_value();
}

namespace detail {

/// Splits sigma's labels into the n+1 segments around an embedding of rho.
inline std::vector<std::vector<std::size_t>> segments(const Run& sigma, const std::vector<std::size_t>& emb) {
  std::vector<std::vector<std::size_t>> out(emb.size() + 1);
  std::size_t seg = 0;
  for (std::size_t j = 0; j < sigma.steps.size(); ++j) {
    if (seg < emb.size() && j == emb[seg]) {
      ++seg;
      continue;
    }
    out[seg].push_back(sigma.steps[j].transition);
  }
  return out;
}

}  // namespace detail

/// A run rho' above rho whose target gains both increments of rho1 and rho2:
/// the segments of rho1 and rho2 between consecutive embedded steps are
/// played one after the other, followed by rho's own step.
inline Run pump_compose(const Vas& vas, const Run& rho, const Run& rho1, const Run& rho2) {
  auto e1 = find_embedding(rho, rho1), e2 = find_embedding(rho, rho2);
  if (!e1 || !rho.target().leq(rho1.target())) throw std::invalid_argument("pump_compose: rho does not embed into rho1");
  if (!e2 || !rho.target().leq(rho2.target())) throw std::invalid_argument("pump_compose: rho does not embed into rho2");
  auto s1 = detail::segments(rho1, *e1), s2 = detail::segments(rho2, *e2);
  std::vector<std::size_t> labels;
  for (std::size_t j = 0; j <= rho.steps.size(); ++j) {
    labels.insert(labels.end(), s1[j].begin(), s1[j].end());
    labels.insert(labels.end(), s2[j].begin(), s2[j].end());
    if (j < rho.steps.size()) labels.push_back(rho.steps[j].transition);
  }
  Run out = replay(vas, labels);
  if (out.target() != rho1.target() + rho2.target() - rho.target())
    throw std::logic_error("pump_compose: target equation violated");
  return out;
}

/// A run above rho0 whose target is target(rho0) + sum coeffs[i] * delta_i.
inline Run pump_linear(const Vas& vas, const Run& rho0, const std::vector<Run>& pumps,
                       const std::vector<Integer>& coeffs) {
  if (pumps.size() != coeffs.size()) throw std::invalid_argument("pump_linear: coefficient count mismatch");
  Run cur = rho0;
  for (std::size_t i = 0; i < pumps.size(); ++i) {
    if (coeffs[i] < 0) throw std::invalid_argument("pump_linear: negative coefficient");
    if (!run_embeds(rho0, pumps[i])) throw std::invalid_argument("pump_linear: pump does not embed the base run");
    for (Integer k = 0; k < coeffs[i]; ++k) cur = pump_compose(vas, rho0, cur, pumps[i]);
  }
  return cur;
}

/// Kept coordinates (in output order) and fixed values for the rest.
struct SectionSpec {
  std::vector<std::size_t> keep;
  std::map<std::size_t, Integer> fixed;

  static SectionSpec full(std::size_t dim) {
    SectionSpec s;
    for (std::size_t i = 0; i < dim; ++i) s.keep.push_back(i);
    return s;
  }

  void validate(std::size_t dim) const {
    std::vector<int> seen(dim, 0);
    for (auto i : keep) {
      if (i >= dim) throw std::invalid_argument("section: kept coordinate out of range");
      ++seen[i];
    }
    for (const auto& [i, v] : fixed) {
      if (i >= dim) throw std::invalid_argument("section: fixed coordinate out of range");
      if (v < 0) throw std::invalid_argument("section: negative fixed value");
      ++seen[i];
    }
    for (std::size_t i = 0; i < dim; ++i)
      if (seen[i] != 1)
        throw std::invalid_argument("section: coordinate " + std::to_string(i) +
                                    " must be either kept or fixed, exactly once");
  }

  bool matches(const Config& v) const {
    for (const auto& [i, x] : fixed)
      if (v[i] != x) return false;
    return true;
  }
  Config project(const Config& v) const { return v.project(keep); }
};

struct SectionedVas {
  Vas vas;
  SectionSpec section;

  void validate() const {
    vas.validate();
    section.validate(vas.dim);
  }
  std::size_t arity() const { return section.keep.size(); }
};

/// Coordinates: the d original ones, then one per state, then one per
/// transition. Each transition (p, v, p') becomes a move of the control token
/// from p to the transition's coordinate, and a second move from there to p'
/// that also adds v.
inline SectionedVas vass_to_vas(const Vass& vass, std::size_t q) {
  vass.validate();
  if (q >= vass.states.size()) throw std::invalid_argument("vass_to_vas: target state out of range");
  const std::size_t d = vass.dim, ns = vass.states.size(), nt = vass.transitions.size();
  const std::size_t dim = d + ns + nt;
  Config src(dim);
  for (std::size_t i = 0; i < d; ++i) src[i] = vass.source[i];
  src[d + vass.initial] = 1;
  std::vector<IntVector> ts;
  for (std::size_t j = 0; j < nt; ++j) {
    const auto& t = vass.transitions[j];
    IntVector enter(dim), leave(dim);
    enter[d + t.from] -= 1;
    enter[d + ns + j] += 1;
    leave[d + ns + j] -= 1;
    leave[d + t.to] += 1;
    for (std::size_t i = 0; i < d; ++i) leave[i] = t.delta[i];
    ts.push_back(std::move(enter));
    ts.push_back(std::move(leave));
  }
  SectionSpec sec;
  for (std::size_t i = 0; i < d; ++i) sec.keep.push_back(i);
  for (std::size_t i = d; i < dim; ++i) sec.fixed[i] = (i == d + q) ? 1 : 0;
  SectionedVas out{Vas(dim, std::move(src), std::move(ts)), std::move(sec)};
  out.validate();
  return out;
}

/// A VAS as a one-state VASS.
inline Vass vas_as_vass(const Vas& vas) {
  Vass out;
  out.dim = vas.dim;
  out.states = {"q"};
  out.source = vas.source;
  for (const auto& t : vas.transitions) out.transitions.push_back({0, t, 0});
  return out;
}

/// A pair of systems of equal dimension whose sections keep the first `kept`
/// coordinates and fix all others to 0. The expansion of each side is the set
/// of reachable configurations vanishing on coordinates >= kept.
struct NormalizedPair {
  Vas u;
  Vas v;
  std::size_t kept = 0;
  std::vector<std::string> labels_u;
  std::vector<std::string> labels_v;

  std::size_t dim() const { return u.dim; }
};

namespace detail {

struct Normalized {
  Vas vas;
  std::size_t kept = 0;
  std::vector<std::string> labels;
};

/// Fixed values become 0: a control token on coordinate g is parked on tmp
/// before each move and restored by it, and a final move consumes the token
/// and subtracts the fixed values. Afterwards no move is enabled.
inline Normalized normalize_one(const SectionedVas& s) {
  s.validate();
  const std::size_t d = s.vas.dim;
  bool gadget = std::any_of(s.section.fixed.begin(), s.section.fixed.end(), [](const auto& kv) { return kv.second != 0; });
  const std::size_t dim = d + (gadget ? 2 : 0);
  std::vector<std::size_t> order = s.section.keep;
  for (std::size_t i = 0; i < dim; ++i)
    if (i >= d || !std::count(order.begin(), order.end(), i)) order.push_back(i);
  // order[new] = old coordinate
  auto permute = [&](const IntVector& x) { return x.project(order); };
  auto widen = [&](const IntVector& x) {
    IntVector w(dim);
    for (std::size_t i = 0; i < d; ++i) w[i] = x[i];
    return w;
  };

  Normalized out;
  out.kept = s.section.keep.size();
  for (auto i : order)
    out.labels.push_back(i < d ? "x" + std::to_string(i) : (i == d ? "gadget" : "gadget_tmp"));
  Config src = widen(s.vas.source);
  std::vector<IntVector> ts;
  if (!gadget) {
    for (const auto& t : s.vas.transitions) ts.push_back(permute(widen(t)));
    out.vas = Vas(dim, permute(src), std::move(ts));
    return out;
  }
  const std::size_t g = d, tmp = d + 1;
  src[g] = 1;
  IntVector lock(dim);
  lock[g] = -1;
  lock[tmp] = 1;
  ts.push_back(permute(lock));
  for (const auto& t : s.vas.transitions) {
    IntVector w = widen(t);
    w[tmp] = -1;
    w[g] = 1;
    ts.push_back(permute(w));
  }
  IntVector fin(dim);
  fin[g] = -1;
  for (const auto& [i, x] : s.section.fixed) fin[i] = -x;
  ts.push_back(permute(fin));
  out.vas = Vas(dim, permute(src), std::move(ts));
  return out;
}

inline Vas pad(const Vas& v, std::size_t dim) {
  auto widen = [&](const IntVector& x) {
    IntVector w(dim);
    for (std::size_t i = 0; i < x.dim(); ++i) w[i] = x[i];
    return w;
  };
  std::vector<IntVector> ts;
  for (const auto& t : v.transitions) ts.push_back(widen(t));
  return Vas(dim, widen(v.source), std::move(ts));
}

}  // namespace detail

/// Brings two sections to a common shape: equal dimension, kept coordinates
/// first, every other coordinate fixed to 0.
inline NormalizedPair normalize_pair(const SectionedVas& a, const SectionedVas& b) {
  if (a.arity() != b.arity())
    throw std::invalid_argument("normalize_pair: sections keep " + std::to_string(a.arity()) + " and " +
                                std::to_string(b.arity()) + " coordinates");
  auto na = detail::normalize_one(a), nb = detail::normalize_one(b);
  const std::size_t dim = std::max(na.vas.dim, nb.vas.dim);
  NormalizedPair out{detail::pad(na.vas, dim), detail::pad(nb.vas, dim), na.kept, na.labels, nb.labels};
  out.labels_u.resize(dim, "pad");
  out.labels_v.resize(dim, "pad");
  return out;
}

/// The kept-first, zero-fixed section of a normalized system.
inline SectionedVas as_section(const Vas& v, std::size_t kept) {
  SectionSpec s;
  for (std::size_t i = 0; i < v.dim; ++i) {
    if (i < kept)
      s.keep.push_back(i);
    else
      s.fixed[i] = 0;
  }
  return {v, std::move(s)};
}

namespace detail {

/// Composes the section of a compiled VASS with an inner zero-fixing of
/// original coordinates >= kept.
inline SectionedVas restrict_compiled(SectionedVas compiled, std::size_t original_dim, std::size_t kept) {
  SectionSpec s;
  for (std::size_t i = 0; i < kept; ++i) s.keep.push_back(i);
  for (std::size_t i = kept; i < original_dim; ++i) s.fixed[i] = 0;
  for (const auto& [i, x] : compiled.section.fixed) s.fixed[i] = x;
  compiled.section = std::move(s);
  compiled.validate();
  return compiled;
}

}  // namespace detail

/// Union: the control nondeterministically starts one of the two systems.
inline SectionedVas section_union(const SectionedVas& a, const SectionedVas& b) {
  auto p = normalize_pair(a, b);
  const std::size_t dim = p.dim();
  Vass w;
  w.dim = dim;
  w.states = {"start", "left", "right", "final"};
  w.source = Config(dim);
  w.transitions.push_back({0, p.u.source, 1});
  w.transitions.push_back({0, p.v.source, 2});
  for (const auto& t : p.u.transitions) w.transitions.push_back({1, t, 1});
  for (const auto& t : p.v.transitions) w.transitions.push_back({2, t, 2});
  w.transitions.push_back({1, IntVector(dim), 3});
  w.transitions.push_back({2, IntVector(dim), 3});
  return detail::restrict_compiled(vass_to_vas(w, 3), dim, p.kept);
}

/// Intersection: the first system runs forward on two copies of the kept
/// coordinates; then the second runs backward on the second copy with its own
/// off-section coordinates, and the section demands it arrives at its source.
inline SectionedVas section_intersection(const SectionedVas& a, const SectionedVas& b) {
  auto p = normalize_pair(a, b);
  const std::size_t k = p.kept, off = p.dim() - k;
  // layout: copy1 [0,k), copy2 [k,2k), offU [2k, 2k+off), offV [2k+off, 2k+2off)
  const std::size_t dim = 2 * k + 2 * off;
  auto forward = [&](const IntVector& t) {
    IntVector w(dim);
    for (std::size_t i = 0; i < k; ++i) w[i] = w[k + i] = t[i];
    for (std::size_t i = 0; i < off; ++i) w[2 * k + i] = t[k + i];
    return w;
  };
  auto backward = [&](const IntVector& t) {
    IntVector w(dim);
    for (std::size_t i = 0; i < k; ++i) w[k + i] = -t[i];
    for (std::size_t i = 0; i < off; ++i) w[2 * k + off + i] = -t[k + i];
    return w;
  };
  Vass w;
  w.dim = dim;
  w.states = {"forward", "backward"};
  w.source = forward(p.u.source);
  for (const auto& t : p.u.transitions) w.transitions.push_back({0, forward(t), 0});
  w.transitions.push_back({0, IntVector(dim), 1});
  for (const auto& t : p.v.transitions) w.transitions.push_back({1, backward(t), 1});
  SectionedVas compiled = vass_to_vas(w, 1);
  SectionSpec s;
  for (std::size_t i = 0; i < k; ++i) s.keep.push_back(i);
  for (std::size_t i = 0; i < k; ++i) s.fixed[k + i] = p.v.source[i];
  for (std::size_t i = 0; i < off; ++i) s.fixed[2 * k + i] = 0;
  for (std::size_t i = 0; i < off; ++i) s.fixed[2 * k + off + i] = p.v.source[k + i];
  for (const auto& [i, x] : compiled.section.fixed)
    if (i >= dim) s.fixed[i] = x;
  compiled.section = std::move(s);
  compiled.validate();
  return compiled;
}

/// Two copies of the VASS with one extra coordinate, starting at 0 and at 1;
/// the second copy may decrement it in state q. Both are read off over all
/// control states through a fresh sink state. The sections are modular
/// separable exactly when q is unreachable.
inline std::pair<SectionedVas, SectionedVas> hardness_instance(const Vass& vass, std::size_t q) {
  vass.validate();
  if (q >= vass.states.size()) throw std::invalid_argument("hardness_instance: state out of range");
  auto copy = [&](int extra, bool decrement) {
    Vass c;
    c.dim = vass.dim + 1;
    c.states = vass.states;
    c.states.push_back("sink");
    c.initial = vass.initial;
    c.source = Config(c.dim);
    for (std::size_t i = 0; i < vass.dim; ++i) c.source[i] = vass.source[i];
    c.source[vass.dim] = extra;
    auto widen = [&](const IntVector& x) {
      IntVector w(c.dim);
      for (std::size_t i = 0; i < vass.dim; ++i) w[i] = x[i];
      return w;
    };
    for (const auto& t : vass.transitions) c.transitions.push_back({t.from, widen(t.delta), t.to});
    if (decrement) {
      IntVector dec(c.dim);
      dec[vass.dim] = -1;
      c.transitions.push_back({q, dec, q});
    }
    const std::size_t sink = vass.states.size();
    for (std::size_t s = 0; s < vass.states.size(); ++s) c.transitions.push_back({s, IntVector(c.dim), sink});
    return vass_to_vas(c, sink);
  };
  return {copy(0, false), copy(1, true)};
}

}  // namespace vassep
