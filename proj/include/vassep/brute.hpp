#pragma once

// Brute-force reference oracles on machine integers. They share no code with
// the exact algorithms and exist to cross-check them at small scale.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace vassep::brute {

using Vec = std::vector<std::int64_t>;

inline Vec add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline bool all_within(const Vec& v, std::int64_t lo, std::int64_t hi) {
  return std::all_of(v.begin(), v.end(), [&](std::int64_t x) { return x >= lo && x <= hi; });
}

/// Calls fn on every vector in the box [lo, hi]^dim.
template <class Fn>
void for_each_in_box(std::size_t dim, std::int64_t lo, std::int64_t hi, Fn&& fn) {
  Vec v(dim, lo);
  if (hi < lo) return;
  while (true) {
    fn(static_cast<const Vec&>(v));
    std::size_t i = 0;
    for (; i < dim; ++i) {
      if (++v[i] <= hi) break;
      v[i] = lo;
    }
    if (i == dim) return;
  }
}

/// Calls fn on every coefficient vector a with 0 <= a[i] <= limits[i].
template <class Fn>
void for_each_coeffs(const Vec& limits, Fn&& fn) {
  Vec a(limits.size(), 0);
  for (auto l : limits)
    if (l < 0) return;
  while (true) {
    fn(static_cast<const Vec&>(a));
    std::size_t i = 0;
    for (; i < a.size(); ++i) {
      if (++a[i] <= limits[i]) break;
      a[i] = 0;
    }
    if (i == a.size()) return;
  }
}

inline Vec combine(const Vec& base, const std::vector<Vec>& gens, const Vec& a) {
  Vec r = base;
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += a[j] * gens[j][i];
  return r;
}

/// Integer coefficients with |a_i| <= radius solving sum a_i g_i = v.
inline std::optional<Vec> lattice_search(const Vec& v, const std::vector<Vec>& gens, std::int64_t radius) {
  std::optional<Vec> found;
  Vec lim(gens.size(), 2 * radius);
  for_each_coeffs(lim, [&](const Vec& raw) {
    if (found) return;
    Vec a(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) a[i] = raw[i] - radius;
    if (combine(Vec(v.size(), 0), gens, a) == v) found = a;
  });
  return found;
}

/// Every nonnegative coefficient vector within the per-period bounds
/// min_j v[j] / p[j]; exhaustive, so its answer is exact.
inline std::optional<Vec> nonneg_search(const Vec& v, const std::vector<Vec>& periods) {
  Vec lim(periods.size(), 0);
  for (std::size_t j = 0; j < periods.size(); ++j) {
    std::int64_t best = -1;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (periods[j][i] > 0) {
        std::int64_t q = v[i] / periods[j][i];
        if (best < 0 || q < best) best = q;
      }
    lim[j] = std::max<std::int64_t>(best, 0);
  }
  std::optional<Vec> found;
  for_each_coeffs(lim, [&](const Vec& a) {
    if (!found && combine(Vec(v.size(), 0), periods, a) == v) found = a;
  });
  return found;
}

/// Residues reached by sum a_i g_i with 0 <= a_i < n: the definition of the
/// generated subgroup of (Z_n)^d, enumerated directly.
inline std::set<Vec> subgroup_by_coeffs(const std::vector<Vec>& gens, std::size_t dim, std::int64_t n) {
  std::set<Vec> out;
  Vec lim(gens.size(), n - 1);
  for_each_coeffs(lim, [&](const Vec& a) {
    Vec r = combine(Vec(dim, 0), gens, a);
    for (auto& x : r) x = ((x % n) + n) % n;
    out.insert(r);
  });
  return out;
}

/// Members of {base} + Lin>=0(periods) with every entry <= bound.
inline std::set<Vec> linear_members(const Vec& base, const std::vector<Vec>& periods, std::int64_t bound) {
  std::set<Vec> out;
  if (!all_within(base, 0, bound)) return out;
  std::vector<Vec> frontier{base};
  out.insert(base);
  while (!frontier.empty()) {
    Vec cur = frontier.back();
    frontier.pop_back();
    for (const auto& p : periods) {
      Vec next = add(cur, p);
      if (next == cur || !all_within(next, 0, bound)) continue;
      if (out.insert(next).second) frontier.push_back(next);
    }
  }
  return out;
}

inline bool mod_equiv(const Vec& u, const Vec& v, std::int64_t n) {
  for (std::size_t i = 0; i < u.size(); ++i)
    if ((((u[i] - v[i]) % n) + n) % n != 0) return false;
  return true;
}

inline bool unary_equiv(const Vec& u, const Vec& v, std::int64_t n) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    if ((u[i] >= n) != (v[i] >= n)) return false;
    if (u[i] < n && u[i] != v[i]) return false;
    if ((((u[i] - v[i]) % n) + n) % n != 0) return false;
  }
  return true;
}

enum class Relation { Modular, Unary };

inline std::optional<std::pair<Vec, Vec>> equivalent_pair(const std::set<Vec>& us, const std::set<Vec>& vs,
                                                          std::int64_t n, Relation rel) {
  for (const auto& u : us)
    for (const auto& v : vs)
      if (rel == Relation::Modular ? mod_equiv(u, v, n) : unary_equiv(u, v, n)) return std::make_pair(u, v);
  return std::nullopt;
}

struct Transition {
  std::size_t from = 0;
  Vec delta;
  std::size_t to = 0;
};

/// Configurations of a VASS reachable by runs whose configurations all stay
/// within [0, cap]. A VAS is the one-state case.
inline std::set<std::pair<std::size_t, Vec>> bounded_reach(std::size_t init, const Vec& source,
                                                           const std::vector<Transition>& ts, std::int64_t cap,
                                                           std::size_t limit = 50'000'000) {
  std::set<std::pair<std::size_t, Vec>> seen;
  if (!all_within(source, 0, cap)) return seen;
  std::vector<std::pair<std::size_t, Vec>> stack{{init, source}};
  seen.insert(stack.front());
  while (!stack.empty()) {
    auto [q, v] = stack.back();
    stack.pop_back();
    for (const auto& t : ts) {
      if (t.from != q) continue;
      Vec w = add(v, t.delta);
      if (!all_within(w, 0, cap)) continue;
      if (seen.emplace(t.to, w).second) {
        if (seen.size() > limit) throw std::runtime_error("brute::bounded_reach: limit exceeded");
        stack.emplace_back(t.to, std::move(w));
      }
    }
  }
  return seen;
}

inline std::set<Vec> bounded_reach_vas(const Vec& source, const std::vector<Vec>& ts, std::int64_t cap) {
  std::vector<Transition> tt;
  for (const auto& t : ts) tt.push_back({0, t, 0});
  std::set<Vec> out;
  for (auto& [q, v] : bounded_reach(0, source, tt, cap)) out.insert(v);
  return out;
}

/// Per-coordinate caps instead of one global cap.
inline std::set<Vec> bounded_reach_box(const Vec& source, const std::vector<Vec>& ts, const Vec& caps) {
  auto ok = [&](const Vec& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] < 0 || v[i] > caps[i]) return false;
    return true;
  };
  std::set<Vec> seen;
  if (!ok(source)) return seen;
  std::vector<Vec> stack{source};
  seen.insert(source);
  while (!stack.empty()) {
    Vec v = stack.back();
    stack.pop_back();
    for (const auto& t : ts) {
      Vec w = add(v, t);
      if (ok(w) && seen.insert(w).second) stack.push_back(std::move(w));
    }
  }
  return seen;
}

/// Section of a finite set: keep the listed coordinates of the vectors whose
/// remaining coordinates equal `fixed`.
inline std::set<Vec> section(const std::set<Vec>& s, const std::vector<std::size_t>& keep,
                             const std::map<std::size_t, std::int64_t>& fixed) {
  std::set<Vec> out;
  for (const auto& v : s) {
    bool ok = true;
    for (auto& [i, x] : fixed)
      if (v[i] != x) ok = false;
    if (!ok) continue;
    Vec p;
    for (auto i : keep) p.push_back(v[i]);
    out.insert(p);
  }
  return out;
}

}  // namespace vassep::brute
