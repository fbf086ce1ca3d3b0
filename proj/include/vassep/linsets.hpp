#pragma once

// Linear, semilinear, modular and unary subsets of N^d.

#include <cstddef>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_set>
#include <utility>
#include <vector>

#include "vassep/integer.hpp"
#include "vassep/intlin.hpp"

namespace vassep {

/// {base} + Lin>=0(periods). Periods are nonzero, nonnegative, and kept in
/// sorted, duplicate-free order so equal sets of generators compare equal.
class LinearSet {
 public:
  LinearSet() = default;
  LinearSet(Config base, std::vector<Config> periods) : base_(std::move(base)) {
    if (!base_.is_nonneg()) throw std::invalid_argument("LinearSet: base has a negative entry");
    std::set<Config> uniq;
    for (auto& p : periods) {
      if (p.dim() != base_.dim()) throw DimensionMismatch(base_.dim(), p.dim(), "LinearSet");
      if (!p.is_nonneg()) throw std::invalid_argument("LinearSet: period has a negative entry");
      if (p.is_zero()) throw std::invalid_argument("LinearSet: zero period");
      uniq.insert(std::move(p));
    }
    periods_.assign(uniq.begin(), uniq.end());
  }

  static LinearSet singleton(Config base) { return LinearSet(std::move(base), {}); }

  std::size_t dim() const { return base_.dim(); }
  const Config& base() const { return base_; }
  const std::vector<Config>& periods() const { return periods_; }

  /// Coordinates on which some period is positive.
  std::vector<bool> support() const {
    std::vector<bool> s(dim(), false);
    for (const auto& p : periods_)
      for (std::size_t i = 0; i < dim(); ++i)
        if (p[i] != 0) s[i] = true;
    return s;
  }

  friend bool operator==(const LinearSet& a, const LinearSet& b) {
    return a.base_ == b.base_ && a.periods_ == b.periods_;
  }
  friend bool operator<(const LinearSet& a, const LinearSet& b) {
    return std::tie(a.base_, a.periods_) < std::tie(b.base_, b.periods_);
  }

  std::string str() const {
    std::string s = "{" + base_.str() + "}+Lin>=0(";
    for (std::size_t i = 0; i < periods_.size(); ++i) s += (i ? "," : "") + periods_[i].str();
    return s + ")";
  }

 private:
  Config base_;
  std::vector<Config> periods_;
};

/// Finite union of linear sets; no components means the empty set.
struct SemilinearSet {
  std::size_t dim = 0;
  std::vector<LinearSet> components;

  bool empty() const { return components.empty(); }
};

/// Union of n-modular equivalence classes, listed by residue.
class ModularSet {
 public:
  ModularSet() = default;
  ModularSet(std::size_t dim, std::int64_t n, std::set<Residue> residues)
      : dim_(dim), n_(n), residues_(std::move(residues)) {
    require_modulus(n, "ModularSet");
    for (const auto& r : residues_) {
      if (r.size() != dim_) throw DimensionMismatch(dim_, r.size(), "ModularSet");
      for (auto x : r)
        if (x < 0 || x >= n_) throw std::invalid_argument("ModularSet: residue entry outside [0,n)");
    }
  }

  std::size_t dim() const { return dim_; }
  std::int64_t modulus() const { return n_; }
  const std::set<Residue>& residues() const { return residues_; }

  friend bool operator==(const ModularSet&, const ModularSet&) = default;

 private:
  std::size_t dim_ = 0;
  std::int64_t n_ = 1;
  std::set<Residue> residues_;
};

/// One coordinate of an n-unary class: an exact value below n, or "at least n
/// and congruent to r".
struct UnaryCoord {
  bool large = false;
  std::int64_t value = 0;

  static UnaryCoord small(std::int64_t v) { return {false, v}; }
  static UnaryCoord large_residue(std::int64_t r) { return {true, r}; }

  /// The least member of the class, in [0, 2n).
  std::int64_t canonical(std::int64_t n) const { return large ? n + value : value; }
  static UnaryCoord from_canonical(std::int64_t c, std::int64_t n) {
    return c < n ? small(c) : large_residue(c - n);
  }
  static UnaryCoord of_value(const Integer& x, std::int64_t n) {
    if (x < n) return small(static_cast<std::int64_t>(x));
    return large_residue(mod_floor(x, n));
  }

  bool contains(const Integer& x, std::int64_t n) const {
    if (!large) return x == value;
    return x >= n && mod_floor(x, n) == value;
  }

  friend bool operator==(const UnaryCoord&, const UnaryCoord&) = default;
  friend bool operator<(const UnaryCoord& a, const UnaryCoord& b) {
    return std::tie(a.large, a.value) < std::tie(b.large, b.value);
  }
};

using UnaryClass = std::vector<UnaryCoord>;

inline UnaryClass unary_class_of(const Config& v, std::int64_t n) {
  UnaryClass c(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) c[i] = UnaryCoord::of_value(v[i], n);
  return c;
}

/// Union of n-unary equivalence classes.
class UnarySet {
 public:
  UnarySet() = default;
  UnarySet(std::size_t dim, std::int64_t n, std::set<UnaryClass> classes)
      : dim_(dim), n_(n), classes_(std::move(classes)) {
    require_modulus(n, "UnarySet");
    for (const auto& c : classes_) {
      if (c.size() != dim_) throw DimensionMismatch(dim_, c.size(), "UnarySet");
      for (const auto& x : c)
        if (x.value < 0 || x.value >= n_) throw std::invalid_argument("UnarySet: descriptor outside [0,n)");
    }
  }

  std::size_t dim() const { return dim_; }
  std::int64_t modulus() const { return n_; }
  const std::set<UnaryClass>& classes() const { return classes_; }

  friend bool operator==(const UnarySet&, const UnarySet&) = default;

 private:
  std::size_t dim_ = 0;
  std::int64_t n_ = 1;
  std::set<UnaryClass> classes_;
};

inline bool linear_member(const LinearSet& l, const Config& v) {
  if (v.dim() != l.dim()) throw DimensionMismatch(l.dim(), v.dim(), "linear_member");
  IntVector rest = v - l.base();
  if (!rest.is_nonneg()) return false;
  return nonneg_member(rest, l.periods()).has_value();
}

inline bool modular_member(const ModularSet& s, const Config& v) {
  if (v.dim() != s.dim()) throw DimensionMismatch(s.dim(), v.dim(), "modular_member");
  return s.residues().count(v.residue(s.modulus())) > 0;
}

inline bool unary_member(const UnarySet& s, const Config& v) {
  if (v.dim() != s.dim()) throw DimensionMismatch(s.dim(), v.dim(), "unary_member");
  if (!v.is_nonneg()) return false;
  return s.classes().count(unary_class_of(v, s.modulus())) > 0;
}

inline bool semilinear_member(const SemilinearSet& s, const Config& v) {
  for (const auto& c : s.components)
    if (linear_member(c, v)) return true;
  return false;
}

/// Residues mod n of the members of L. Every element of the residue subgroup
/// of the periods is realized by a nonnegative combination (take coefficients
/// mod n), so the result is exact.
inline std::set<Residue> mod_residues(const LinearSet& l, std::int64_t n, std::size_t cap = 1'000'000) {
  auto group = residue_subgroup(IntMatrix(l.dim(), l.periods()), n, cap);
  Residue b = l.base().residue(n);
  std::set<Residue> out;
  for (auto r : group) {
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = (r[i] + b[i]) % n;
    out.insert(std::move(r));
  }
  return out;
}

/// The n-unary classes met by L, by closure under adding periods. This is
/// exact because n-unary equivalence is a congruence for addition on N^d.
inline std::set<UnaryClass> unary_classes(const LinearSet& l, std::int64_t n, std::size_t cap = 1'000'000) {
  require_modulus(n, "unary_classes");
  const std::size_t d = l.dim();
  auto encode = [&](const UnaryClass& c) {
    Residue r(d);
    for (std::size_t i = 0; i < d; ++i) r[i] = c[i].canonical(n);
    return r;
  };
  std::vector<Residue> steps;
  for (const auto& p : l.periods()) {
    Residue s(d);
    for (std::size_t i = 0; i < d; ++i) s[i] = p[i] >= 2 * n ? 2 * n : static_cast<std::int64_t>(p[i]);
    steps.push_back(std::move(s));
  }
  auto add = [&](const Residue& a, const Residue& s) {
    Residue out(d);
    for (std::size_t i = 0; i < d; ++i) {
      std::int64_t x = a[i] + s[i];
      out[i] = x < n ? x : n + (x - n) % n;
    }
    return out;
  };
  std::unordered_set<Residue, ResidueHash> seen;
  std::vector<Residue> queue{encode(unary_class_of(l.base(), n))};
  seen.insert(queue.front());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& s : steps) {
      Residue next = add(queue[head], s);
      if (seen.insert(next).second) {
        if (seen.size() > cap) throw BudgetExceeded("unary class closure exceeds cap");
        queue.push_back(std::move(next));
      }
    }
  }
  std::set<UnaryClass> out;
  for (const auto& r : queue) {
    UnaryClass c(d);
    for (std::size_t i = 0; i < d; ++i) c[i] = UnaryCoord::from_canonical(r[i], n);
    out.insert(std::move(c));
  }
  return out;
}

/// The same set, presented as a union of n-unary classes (Small(r) and Large(r)
/// per coordinate for every residue r).
inline UnarySet modular_to_unary(const ModularSet& m) {
  const std::size_t d = m.dim();
  std::set<UnaryClass> classes;
  for (const auto& r : m.residues()) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
      UnaryClass c(d);
      for (std::size_t i = 0; i < d; ++i) c[i] = {((mask >> i) & 1U) != 0, r[i]};
      classes.insert(std::move(c));
    }
  }
  return UnarySet(d, m.modulus(), std::move(classes));
}

namespace detail {

inline std::size_t class_count(std::size_t d, std::int64_t n) {
  double total = 1;
  for (std::size_t i = 0; i < d; ++i) total *= 2.0 * static_cast<double>(n);
  return total > 1e15 ? static_cast<std::size_t>(-1) : static_cast<std::size_t>(total);
}

template <class Fn>
void for_each_product(const std::vector<std::vector<UnaryCoord>>& choices, Fn&& fn) {
  UnaryClass cur(choices.size());
  std::vector<std::size_t> idx(choices.size(), 0);
  for (const auto& c : choices)
    if (c.empty()) return;
  while (true) {
    for (std::size_t i = 0; i < choices.size(); ++i) cur[i] = choices[i][idx[i]];
    fn(cur);
    std::size_t i = 0;
    for (; i < choices.size(); ++i) {
      if (++idx[i] < choices[i].size()) break;
      idx[i] = 0;
    }
    if (i == choices.size()) return;
  }
}

}  // namespace detail

inline constexpr std::size_t kDefaultClassCap = 2'000'000;

/// Re-expresses s over modulus m, a multiple of s.modulus(). Membership is
/// unchanged because m-unary equivalence refines n-unary equivalence.
inline UnarySet unary_refine(const UnarySet& s, std::int64_t m, std::size_t cap = kDefaultClassCap) {
  const std::int64_t n = s.modulus();
  if (m % n != 0) throw std::invalid_argument("unary_refine: target modulus must be a multiple");
  if (m == n) return s;
  std::set<UnaryClass> out;
  for (const auto& c : s.classes()) {
    std::vector<std::vector<UnaryCoord>> choices(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (!c[i].large) {
        choices[i].push_back(c[i]);
        continue;
      }
      for (std::int64_t x = n; x < m; ++x)
        if (x % n == c[i].value) choices[i].push_back(UnaryCoord::small(x));
      for (std::int64_t r = 0; r < m; ++r)
        if (r % n == c[i].value) choices[i].push_back(UnaryCoord::large_residue(r));
    }
    detail::for_each_product(choices, [&](const UnaryClass& k) {
      out.insert(k);
      if (out.size() > cap) throw BudgetExceeded("unary refinement exceeds class cap");
    });
  }
  return UnarySet(s.dim(), m, std::move(out));
}

/// Every n-unary class of N^d.
inline UnarySet unary_full(std::size_t dim, std::int64_t n, std::size_t cap = kDefaultClassCap) {
  if (detail::class_count(dim, n) > cap) throw BudgetExceeded("unary universe exceeds class cap");
  std::vector<std::vector<UnaryCoord>> choices(dim);
  for (auto& c : choices)
    for (std::int64_t x = 0; x < 2 * n; ++x) c.push_back(UnaryCoord::from_canonical(x, n));
  std::set<UnaryClass> all;
  detail::for_each_product(choices, [&](const UnaryClass& k) { all.insert(k); });
  return UnarySet(dim, n, std::move(all));
}

/// {x : x[i] == value} (or its complement), over modulus n > value.
inline UnarySet unary_pin(std::size_t dim, std::size_t i, std::int64_t value, std::int64_t n, bool equal,
                          std::size_t cap = kDefaultClassCap) {
  if (value >= n) throw std::invalid_argument("unary_pin: modulus must exceed the pinned value");
  if (detail::class_count(dim, n) > cap) throw BudgetExceeded("pin set exceeds class cap");
  std::vector<std::vector<UnaryCoord>> choices(dim);
  for (std::size_t c = 0; c < dim; ++c)
    for (std::int64_t x = 0; x < 2 * n; ++x)
      if (c != i || ((x == value) == equal)) choices[c].push_back(UnaryCoord::from_canonical(x, n));
  std::set<UnaryClass> out;
  detail::for_each_product(choices, [&](const UnaryClass& k) { out.insert(k); });
  return UnarySet(dim, n, std::move(out));
}

enum class BoolOp { Union, Intersection, Complement };

/// Boolean combination of unary sets, computed over the lcm of the moduli.
/// Complement takes exactly one argument.
inline UnarySet unary_boolean(BoolOp op, const std::vector<UnarySet>& args, std::size_t cap = kDefaultClassCap) {
  if (args.empty()) throw std::invalid_argument("unary_boolean: no arguments");
  const std::size_t d = args.front().dim();
  std::int64_t m = 1;
  for (const auto& a : args) {
    if (a.dim() != d) throw DimensionMismatch(d, a.dim(), "unary_boolean");
    m = lcm64(m, a.modulus());
  }
  if (op == BoolOp::Complement) {
    if (args.size() != 1) throw std::invalid_argument("unary_boolean: complement takes one argument");
    UnarySet all = unary_full(d, m, cap);
    UnarySet self = unary_refine(args.front(), m, cap);
    std::set<UnaryClass> out;
    std::set_difference(all.classes().begin(), all.classes().end(), self.classes().begin(),
                        self.classes().end(), std::inserter(out, out.end()));
    return UnarySet(d, m, std::move(out));
  }
  std::set<UnaryClass> acc = unary_refine(args.front(), m, cap).classes();
  for (std::size_t k = 1; k < args.size(); ++k) {
    UnarySet r = unary_refine(args[k], m, cap);
    std::set<UnaryClass> next;
    if (op == BoolOp::Union)
      std::set_union(acc.begin(), acc.end(), r.classes().begin(), r.classes().end(),
                     std::inserter(next, next.end()));
    else
      std::set_intersection(acc.begin(), acc.end(), r.classes().begin(), r.classes().end(),
                            std::inserter(next, next.end()));
    acc = std::move(next);
  }
  return UnarySet(d, m, std::move(acc));
}

inline UnarySet unary_empty(std::size_t dim, std::int64_t n = 1) { return UnarySet(dim, n, {}); }

/// L ∩ {x : x[i] == c} as finitely many linear sets.
inline SemilinearSet intersect_hyperplane(const LinearSet& l, std::size_t i, const Integer& c) {
  if (i >= l.dim()) throw std::out_of_range("intersect_hyperplane: coordinate out of range");
  SemilinearSet out{l.dim(), {}};
  Integer need = c - l.base()[i];
  if (need < 0) return out;
  std::vector<Config> moving, fixed;
  for (const auto& p : l.periods()) (p[i] > 0 ? moving : fixed).push_back(p);

  std::set<Config> bases;
  Config base = l.base();
  // enumerate nonnegative a with sum a_j * moving[j][i] == need
  auto rec = [&](auto&& self, std::size_t j, const Integer& left) -> void {
    if (left == 0) {
      bases.insert(base);
      return;
    }
    if (j == moving.size()) return;
    const Integer step = moving[j][i];
    for (Integer a = left / step; a >= 0; --a) {
      base.add_scaled(moving[j], a);
      self(self, j + 1, left - a * step);
      base.add_scaled(moving[j], -a);
    }
  };
  rec(rec, 0, need);
  for (const auto& b : bases) out.components.emplace_back(b, fixed);
  return out;
}

/// Members of L with every entry <= bound, generated by adding periods.
inline std::vector<Config> bounded_members(const LinearSet& l, const Integer& bound, std::size_t cap = 2'000'000) {
  std::vector<Config> out;
  auto within = [&](const Config& v) {
    for (const auto& x : v)
      if (x > bound) return false;
    return true;
  };
  if (!within(l.base())) return out;
  std::unordered_set<Config, IntVectorHash> seen{l.base()};
  out.push_back(l.base());
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& p : l.periods()) {
      Config next = out[head] + p;
      if (within(next) && seen.insert(next).second) {
        if (out.size() >= cap) throw BudgetExceeded("bounded member enumeration exceeds cap");
        out.push_back(std::move(next));
      }
    }
  }
  return out;
}

}  // namespace vassep
