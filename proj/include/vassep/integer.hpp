#pragma once

// Exact integers and fixed-dimension integer vectors.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace vassep {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;

class DimensionMismatch : public std::invalid_argument {
 public:
  DimensionMismatch(std::size_t expected, std::size_t got, const std::string& where)
      : std::invalid_argument(where + ": dimension mismatch (expected " + std::to_string(expected) +
                              ", got " + std::to_string(got) + ")") {}
};

/// Raised when an enumeration would exceed its configured size cap. Never
/// silently truncated.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Floor division remainder: result in [0, n) for n > 0.
inline Integer mod_floor(const Integer& x, const Integer& n) {
  Integer r = x % n;
  if (r < 0) r += n;
  return r;
}

inline std::int64_t mod_floor(const Integer& x, std::int64_t n) {
  return static_cast<std::int64_t>(mod_floor(x, Integer(n)));
}

/// Floor of a / b for b != 0.
inline Integer div_floor(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

inline bool fits_int64(const Integer& x) {
  return x >= std::numeric_limits<std::int64_t>::min() &&
         x <= std::numeric_limits<std::int64_t>::max();
}

inline std::int64_t to_int64(const Integer& x) {
  if (!fits_int64(x)) throw std::overflow_error("integer does not fit in 64 bits: " + x.str());
  return static_cast<std::int64_t>(x);
}

struct ExtendedGcd {
  Integer g;  // gcd, >= 0
  Integer x;  // x*a + y*b == g
  Integer y;
};

inline ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

inline std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  return a / std::gcd(a, b) * b;
}

/// A point of Z^d. The dimension is fixed at construction.
class IntVector {
 public:
  IntVector() = default;
  explicit IntVector(std::size_t dim) : entries_(dim) {}
  IntVector(std::initializer_list<long long> values) {
    entries_.reserve(values.size());
    for (long long v : values) entries_.emplace_back(v);
  }
  explicit IntVector(std::vector<Integer> entries) : entries_(std::move(entries)) {}
  explicit IntVector(const std::vector<std::int64_t>& entries) {
    entries_.reserve(entries.size());
    for (auto v : entries) entries_.emplace_back(v);
  }

  static IntVector zero(std::size_t dim) { return IntVector(dim); }
  static IntVector unit(std::size_t dim, std::size_t i, const Integer& scale = 1) {
    IntVector v(dim);
    v.entries_.at(i) = scale;
    return v;
  }

  std::size_t dim() const { return entries_.size(); }
  const Integer& operator[](std::size_t i) const { return entries_[i]; }
  Integer& operator[](std::size_t i) { return entries_[i]; }
  const Integer& at(std::size_t i) const { return entries_.at(i); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  const std::vector<Integer>& entries() const { return entries_; }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Integer& x) { return x == 0; });
  }
  bool is_nonneg() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Integer& x) { return x >= 0; });
  }

  /// Componentwise order.
  bool leq(const IntVector& other) const {
    require_same_dim(other, "IntVector::leq");
    for (std::size_t i = 0; i < dim(); ++i)
      if (entries_[i] > other.entries_[i]) return false;
    return true;
  }

  IntVector& operator+=(const IntVector& o) {
    require_same_dim(o, "IntVector::operator+=");
    for (std::size_t i = 0; i < dim(); ++i) entries_[i] += o.entries_[i];
    return *this;
  }
  IntVector& operator-=(const IntVector& o) {
    require_same_dim(o, "IntVector::operator-=");
    for (std::size_t i = 0; i < dim(); ++i) entries_[i] -= o.entries_[i];
    return *this;
  }
  IntVector& operator*=(const Integer& k) {
    for (auto& x : entries_) x *= k;
    return *this;
  }
  /// this += k * o
  IntVector& add_scaled(const IntVector& o, const Integer& k) {
    require_same_dim(o, "IntVector::add_scaled");
    if (k == 0) return *this;
    for (std::size_t i = 0; i < dim(); ++i) entries_[i] += k * o.entries_[i];
    return *this;
  }

  friend IntVector operator+(IntVector a, const IntVector& b) { return a += b; }
  friend IntVector operator-(IntVector a, const IntVector& b) { return a -= b; }
  friend IntVector operator*(IntVector a, const Integer& k) { return a *= k; }
  friend IntVector operator*(const Integer& k, IntVector a) { return a *= k; }
  friend IntVector operator-(IntVector a) {
    for (auto& x : a.entries_) x = -x;
    return a;
  }
  friend bool operator==(const IntVector& a, const IntVector& b) { return a.entries_ == b.entries_; }
  friend bool operator!=(const IntVector& a, const IntVector& b) { return !(a == b); }
  /// Lexicographic; used for ordered containers only.
  friend bool operator<(const IntVector& a, const IntVector& b) {
    return std::lexicographical_compare(a.entries_.begin(), a.entries_.end(), b.entries_.begin(),
                                        b.entries_.end());
  }

  /// Entrywise floor residue modulo n > 0.
  std::vector<std::int64_t> residue(std::int64_t n) const {
    std::vector<std::int64_t> r(dim());
    for (std::size_t i = 0; i < dim(); ++i) r[i] = mod_floor(entries_[i], n);
    return r;
  }

  /// Keeps only the listed coordinates, in the given order.
  IntVector project(const std::vector<std::size_t>& coords) const {
    IntVector p(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) p.entries_[i] = entries_.at(coords[i]);
    return p;
  }

  std::string str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < dim(); ++i) {
      if (i) os << ',';
      os << entries_[i];
    }
    os << ')';
    return os.str();
  }

  void require_same_dim(const IntVector& o, const char* where) const {
    if (o.dim() != dim()) throw DimensionMismatch(dim(), o.dim(), where);
  }

 private:
  std::vector<Integer> entries_;
};

/// A point of N^d. Same representation; nonnegativity is checked where it matters.
using Config = IntVector;

/// A point of (Z_n)^d, entries in [0, n).
using Residue = std::vector<std::int64_t>;

struct IntVectorHash {
  std::size_t operator()(const IntVector& v) const {
    std::size_t h = v.dim();
    for (const auto& x : v) {
      h ^= std::hash<Integer>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

struct ResidueHash {
  std::size_t operator()(const Residue& r) const {
    std::size_t h = r.size();
    for (auto x : r) h ^= std::hash<std::int64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

inline std::vector<std::size_t> support(const IntVector& v) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < v.dim(); ++i)
    if (v[i] != 0) s.push_back(i);
  return s;
}

}  // namespace vassep
