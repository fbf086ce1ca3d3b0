#pragma once

// Exact integer linear algebra over Z^d: Hermite normal form, lattice
// membership (also modulo n), nonnegative combinations, and the subgroup
// of (Z_n)^d spanned by a generator list.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <unordered_set>
#include <utility>
#include <vector>

#include "vassep/integer.hpp"

namespace vassep {

/// An ordered list of generators (columns) of equal dimension.
class IntMatrix {
 public:
  explicit IntMatrix(std::size_t dim = 0) : dim_(dim) {}
  IntMatrix(std::size_t dim, std::vector<IntVector> columns) : dim_(dim) {
    for (auto& c : columns) add_column(std::move(c));
  }

  void add_column(IntVector c) {
    if (c.dim() != dim_) throw DimensionMismatch(dim_, c.dim(), "IntMatrix::add_column");
    columns_.push_back(std::move(c));
  }

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return columns_.size(); }
  const IntVector& operator[](std::size_t i) const { return columns_[i]; }
  const std::vector<IntVector>& columns() const { return columns_; }

 private:
  std::size_t dim_;
  std::vector<IntVector> columns_;
};

/// Column-style Hermite normal form of a generator list.
///
/// `columns[j]` has its first nonzero entry (the pivot) at row `pivot_rows[j]`,
/// pivot rows strictly increase, pivots are positive, and the entries of
/// earlier columns in a pivot row lie in [0, pivot). `transform[j]` expresses
/// `columns[j]` over the original generators, so the basis spans exactly the
/// same subgroup of Z^d as `generators`.
struct LatticeBasis {
  std::size_t dim = 0;
  std::vector<IntVector> generators;
  std::vector<IntVector> columns;
  std::vector<std::size_t> pivot_rows;
  std::vector<std::vector<Integer>> transform;

  std::size_t rank() const { return columns.size(); }
};

inline LatticeBasis hnf(const IntMatrix& gens) {
  const std::size_t d = gens.dim();
  const std::size_t k = gens.size();
  std::vector<IntVector> cols = gens.columns();
  // ops[j] = coefficients of cols[j] over the input generators
  std::vector<std::vector<Integer>> ops(k, std::vector<Integer>(k));
  for (std::size_t j = 0; j < k; ++j) ops[j][j] = 1;

  auto combine = [&](std::size_t a, std::size_t b, const Integer& xa, const Integer& xb,
                     const Integer& ya, const Integer& yb) {
    // (col_a, col_b) <- (xa*col_a + xb*col_b, ya*col_a + yb*col_b)
    IntVector na = cols[a] * xa;
    na.add_scaled(cols[b], xb);
    IntVector nb = cols[a] * ya;
    nb.add_scaled(cols[b], yb);
    cols[a] = std::move(na);
    cols[b] = std::move(nb);
    for (std::size_t i = 0; i < k; ++i) {
      Integer oa = ops[a][i], ob = ops[b][i];
      ops[a][i] = xa * oa + xb * ob;
      ops[b][i] = ya * oa + yb * ob;
    }
  };

  LatticeBasis out;
  out.dim = d;
  out.generators = gens.columns();
  std::size_t r = 0;
  for (std::size_t row = 0; row < d && r < k; ++row) {
    for (std::size_t j = r + 1; j < k; ++j) {
      if (cols[j][row] == 0) continue;
      Integer a = cols[r][row], b = cols[j][row];
      auto eg = extended_gcd(a, b);
      combine(r, j, eg.x, eg.y, -b / eg.g, a / eg.g);
    }
    if (cols[r][row] == 0) continue;
    if (cols[r][row] < 0) {
      cols[r] = -cols[r];
      for (auto& c : ops[r]) c = -c;
    }
    const Integer& pivot = cols[r][row];
    for (std::size_t j = 0; j < r; ++j) {
      Integer q = div_floor(cols[j][row], pivot);
      if (q == 0) continue;
      cols[j].add_scaled(cols[r], -q);
      for (std::size_t i = 0; i < k; ++i) ops[j][i] -= q * ops[r][i];
    }
    out.pivot_rows.push_back(row);
    ++r;
  }
  out.columns.assign(cols.begin(), cols.begin() + static_cast<std::ptrdiff_t>(r));
  out.transform.assign(ops.begin(), ops.begin() + static_cast<std::ptrdiff_t>(r));
  return out;
}

/// Solves basis.columns * x = v by forward substitution on the echelon form.
inline std::optional<std::vector<Integer>> solve_in_basis(const IntVector& v, const LatticeBasis& basis) {
  if (v.dim() != basis.dim) throw DimensionMismatch(basis.dim, v.dim(), "lattice_member");
  IntVector rest = v;
  std::vector<Integer> x(basis.rank());
  std::size_t row = 0;
  for (std::size_t j = 0; j < basis.rank(); ++j) {
    const std::size_t prow = basis.pivot_rows[j];
    for (; row < prow; ++row)
      if (rest[row] != 0) return std::nullopt;
    const Integer& pivot = basis.columns[j][prow];
    if (rest[prow] % pivot != 0) return std::nullopt;
    x[j] = rest[prow] / pivot;
    rest.add_scaled(basis.columns[j], -x[j]);
    row = prow + 1;
  }
  if (!rest.is_zero()) return std::nullopt;
  return x;
}

/// Integer coefficients a with sum a_i * generators[i] == v, or nullopt when
/// v is not in the subgroup generated by the basis' generators.
inline std::optional<std::vector<Integer>> lattice_member(const IntVector& v, const LatticeBasis& basis) {
  auto x = solve_in_basis(v, basis);
  if (!x) return std::nullopt;
  std::vector<Integer> a(basis.generators.size());
  for (std::size_t j = 0; j < x->size(); ++j)
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += (*x)[j] * basis.transform[j][i];
  return a;
}

inline std::optional<std::vector<Integer>> lattice_member(const IntVector& v, const IntMatrix& gens) {
  if (v.dim() != gens.dim()) throw DimensionMismatch(gens.dim(), v.dim(), "lattice_member");
  return lattice_member(v, hnf(gens));
}

/// sum coeffs[i] * gens[i]
inline IntVector recombine(const std::vector<IntVector>& gens, const std::vector<Integer>& coeffs,
                           std::size_t dim) {
  if (gens.size() != coeffs.size())
    throw std::invalid_argument("recombine: coefficient count does not match generator count");
  IntVector out(dim);
  for (std::size_t i = 0; i < gens.size(); ++i) out.add_scaled(gens[i], coeffs[i]);
  return out;
}

inline void require_modulus(std::int64_t n, const char* where) {
  if (n < 1) throw std::invalid_argument(std::string(where) + ": modulus must be >= 1");
}

/// Subgroup of (Z_n)^d generated by the generators' residues, as a sorted list.
/// Throws BudgetExceeded once more than `cap` elements have been found.
inline std::vector<Residue> residue_subgroup(const IntMatrix& gens, std::int64_t n,
                                             std::size_t cap = 1'000'000) {
  require_modulus(n, "residue_subgroup");
  const std::size_t d = gens.dim();
  std::vector<Residue> steps;
  for (const auto& g : gens.columns()) {
    Residue r = g.residue(n);
    if (std::any_of(r.begin(), r.end(), [](auto x) { return x != 0; })) steps.push_back(std::move(r));
  }
  std::unordered_set<Residue, ResidueHash> seen;
  std::vector<Residue> queue{Residue(d, 0)};
  seen.insert(queue.front());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& s : steps) {
      Residue next = queue[head];
      for (std::size_t i = 0; i < d; ++i) next[i] = (next[i] + s[i]) % n;
      if (seen.insert(next).second) {
        if (seen.size() > cap)
          throw BudgetExceeded("residue subgroup exceeds " + std::to_string(cap) + " elements (n=" +
                               std::to_string(n) + ")");
        queue.push_back(std::move(next));
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

/// Membership of v mod n in the residue subgroup, by explicit closure.
inline bool mod_lattice_member_closure(const IntVector& v, const IntMatrix& gens, std::int64_t n,
                                       std::size_t cap = 1'000'000) {
  require_modulus(n, "mod_lattice_member");
  if (v.dim() != gens.dim()) throw DimensionMismatch(gens.dim(), v.dim(), "mod_lattice_member");
  auto group = residue_subgroup(gens, n, cap);
  return std::binary_search(group.begin(), group.end(), v.residue(n));
}

/// Membership of v in Lin(gens) + n*Z^d, via HNF of the augmented generator list.
inline bool mod_lattice_member_hnf(const IntVector& v, const IntMatrix& gens, std::int64_t n) {
  require_modulus(n, "mod_lattice_member");
  if (v.dim() != gens.dim()) throw DimensionMismatch(gens.dim(), v.dim(), "mod_lattice_member");
  IntMatrix aug = gens;
  for (std::size_t i = 0; i < gens.dim(); ++i) aug.add_column(IntVector::unit(gens.dim(), i, n));
  return solve_in_basis(v, hnf(aug)).has_value();
}

inline bool mod_lattice_member(const IntVector& v, const IntMatrix& gens, std::int64_t n) {
  require_modulus(n, "mod_lattice_member");
  if (v.dim() != gens.dim()) throw DimensionMismatch(gens.dim(), v.dim(), "mod_lattice_member");
  if (n == 1) return true;
  // closure is cheap while (Z_n)^d stays small
  double size = 1;
  for (std::size_t i = 0; i < gens.dim() && size <= 4096; ++i) size *= static_cast<double>(n);
  if (size <= 4096) return mod_lattice_member_closure(v, gens, n);
  return mod_lattice_member_hnf(v, gens, n);
}

namespace detail {

struct NonnegSearch {
  std::vector<IntVector> periods;
  std::vector<Integer> bounds;
  std::vector<LatticeBasis> suffix_lattice;
  std::vector<std::vector<bool>> suffix_support;
  std::set<std::pair<std::size_t, IntVector>> failed;
  std::vector<Integer> chosen;

  bool run(std::size_t i, const IntVector& rest) {
    if (rest.is_zero()) {
      for (std::size_t j = i; j < chosen.size(); ++j) chosen[j] = 0;
      return true;
    }
    if (i == periods.size()) return false;
    for (std::size_t c = 0; c < rest.dim(); ++c)
      if (rest[c] > 0 && !suffix_support[i][c]) return false;
    if (failed.count({i, rest})) return false;
    if (!solve_in_basis(rest, suffix_lattice[i])) {
      failed.insert({i, rest});
      return false;
    }
    const IntVector& p = periods[i];
    Integer limit = -1;
    for (std::size_t c = 0; c < p.dim(); ++c) {
      if (p[c] <= 0) continue;
      Integer q = rest[c] / p[c];
      if (limit < 0 || q < limit) limit = q;
    }
    for (Integer a = limit; a >= 0; --a) {
      IntVector next = rest;
      next.add_scaled(p, -a);
      chosen[i] = a;
      if (run(i + 1, next)) return true;
    }
    failed.insert({i, rest});
    return false;
  }
};

}  // namespace detail

/// Nonnegative coefficients a with sum a_i * periods[i] == v, or nullopt.
///
/// Exact: coefficient ranges are finite because periods are nonnegative and
/// nonzero. Zero periods are ignored (their coefficient is reported as 0).
inline std::optional<std::vector<Integer>> nonneg_member(const IntVector& v,
                                                         const std::vector<IntVector>& periods) {
  if (!v.is_nonneg()) throw std::invalid_argument("nonneg_member: target has a negative entry");
  std::vector<std::size_t> live;
  for (std::size_t i = 0; i < periods.size(); ++i) {
    const auto& p = periods[i];
    if (p.dim() != v.dim()) throw DimensionMismatch(v.dim(), p.dim(), "nonneg_member");
    if (!p.is_nonneg()) throw std::invalid_argument("nonneg_member: period has a negative entry");
    if (!p.is_zero()) live.push_back(i);
  }
  detail::NonnegSearch search;
  for (auto i : live) search.periods.push_back(periods[i]);
  const std::size_t m = search.periods.size();
  search.chosen.assign(m, 0);
  search.suffix_lattice.resize(m + 1);
  search.suffix_support.assign(m + 1, std::vector<bool>(v.dim(), false));
  for (std::size_t i = m + 1; i-- > 0;) {
    IntMatrix tail(v.dim());
    for (std::size_t j = i; j < m; ++j) tail.add_column(search.periods[j]);
    search.suffix_lattice[i] = hnf(tail);
    if (i < m) {
      search.suffix_support[i] = search.suffix_support[i + 1];
      for (std::size_t c = 0; c < v.dim(); ++c)
        if (search.periods[i][c] > 0) search.suffix_support[i][c] = true;
    }
  }
  if (!search.run(0, v)) return std::nullopt;
  std::vector<Integer> coeffs(periods.size());
  for (std::size_t j = 0; j < m; ++j) coeffs[live[j]] = search.chosen[j];
  return coeffs;
}

/// Adds `v` to the retained generators unless it already lies in their span.
/// Along any stream the span forms an ascending chain of subgroups of Z^d,
/// so only finitely many additions happen.
inline std::pair<LatticeBasis, bool> finite_base(const LatticeBasis& seen, const IntVector& v) {
  if (v.dim() != seen.dim) throw DimensionMismatch(seen.dim, v.dim(), "finite_base");
  if (solve_in_basis(v, seen)) return {seen, false};
  IntMatrix gens(seen.dim, seen.generators);
  gens.add_column(v);
  return {hnf(gens), true};
}

inline LatticeBasis empty_basis(std::size_t dim) { return hnf(IntMatrix(dim)); }

}  // namespace vassep
