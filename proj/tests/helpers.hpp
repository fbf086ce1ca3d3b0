#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "vassep/brute.hpp"
#include "vassep/integer.hpp"

namespace testutil {

inline vassep::brute::Vec to_vec(const vassep::IntVector& v) {
  vassep::brute::Vec out;
  for (const auto& x : v) out.push_back(vassep::to_int64(x));
  return out;
}

inline vassep::IntVector from_vec(const vassep::brute::Vec& v) { return vassep::IntVector(v); }

inline std::vector<vassep::IntVector> from_vecs(const std::vector<vassep::brute::Vec>& vs) {
  std::vector<vassep::IntVector> out;
  for (const auto& v : vs) out.push_back(from_vec(v));
  return out;
}

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(gen);
  }
  vassep::brute::Vec vec(std::size_t d, std::int64_t lo, std::int64_t hi) {
    vassep::brute::Vec v(d);
    for (auto& x : v) x = uniform(lo, hi);
    return v;
  }
  /// Nonnegative and not all zero.
  vassep::brute::Vec period(std::size_t d, std::int64_t hi) {
    while (true) {
      auto v = vec(d, 0, hi);
      for (auto x : v)
        if (x != 0) return v;
    }
  }
};

}  // namespace testutil
