#pragma once

// Seeded generators and independent oracles shared by the unit tests.
// Oracles here are written from the definitions and never call the code
// they check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "rauzy/numerics.hpp"
#include "rauzy/permutation.hpp"

namespace rauzy::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

  /// Uniform on the grid (lo, hi) with the given denominator, never an endpoint.
  Rational rational(const Rational& lo, const Rational& hi, std::int64_t den = 1 << 20) {
    Rational t(integer(1, den - 1), den);
    t.canonicalize();
    return lo + t * (hi - lo);
  }

  RVector positive(int n, std::int64_t den = 1 << 20) {
    RVector v(n);
    for (int i = 0; i < n; ++i) v(i) = rational(0, 1, den);
    return v;
  }

  /// Bottom row of a uniformly random permutation of 1..n.
  std::vector<int> shuffled(int n) {
    std::vector<int> row(static_cast<std::size_t>(n));
    std::iota(row.begin(), row.end(), 1);
    for (int i = n - 1; i > 0; --i) std::swap(row[static_cast<std::size_t>(i)], row[static_cast<std::size_t>(integer(0, i))]);
    return row;
  }

  /// Rejection sampling until irreducible by the prefix oracle below.
  Perm irreducible(int n);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// True iff no proper prefix {1..k} of the top row maps onto {1..k}.
inline bool irreducible_oracle(const std::vector<int>& map) {
  const int n = static_cast<int>(map.size());
  int seen_max = 0;
  for (int k = 1; k < n; ++k) {
    seen_max = std::max(seen_max, map[static_cast<std::size_t>(k - 1)]);
    if (seen_max == k) return false;
  }
  return true;
}

inline std::vector<int> invert(const std::vector<int>& f) {
  std::vector<int> g(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) g[static_cast<std::size_t>(f[i] - 1)] = static_cast<int>(i) + 1;
  return g;
}

inline Perm Gen::irreducible(int n) {
  for (;;) {
    const auto row = shuffled(n);
    if (irreducible_oracle(invert(row))) return Perm::from_bottom_row(row);
  }
}

/// Brute force over all n! maps.
inline std::set<std::vector<int>> irreducible_maps_oracle(int n) {
  std::vector<int> m(static_cast<std::size_t>(n));
  std::iota(m.begin(), m.end(), 1);
  std::set<std::vector<int>> out;
  do {
    if (irreducible_oracle(m)) out.insert(m);
  } while (std::next_permutation(m.begin(), m.end()));
  return out;
}

/// T(x) = x - sum_{j < i} l_j + sum_{pi(j) < pi(i)} l_j for x in the i-th interval.
inline Rational iet_oracle(const RVector& lengths, const std::vector<int>& map, const Rational& x) {
  const int n = static_cast<int>(map.size());
  Rational left = 0;
  for (int i = 1; i <= n; ++i) {
    const Rational right = left + lengths(i - 1);
    if (x < right || i == n) {
      Rational target = 0;
      for (int j = 1; j <= n; ++j)
        if (map[static_cast<std::size_t>(j - 1)] < map[static_cast<std::size_t>(i - 1)]) target += lengths(j - 1);
      return x - left + target;
    }
    left = right;
  }
  return x;
}

/// Repeated floor-and-invert.
inline std::vector<Integer> floor_cf_oracle(Rational q) {
  std::vector<Integer> out;
  for (;;) {
    Integer a = q.get_num() / q.get_den();  // truncation equals floor for q >= 0
    out.push_back(a);
    q -= a;
    if (q == 0) return out;
    q = 1 / q;
  }
}

inline Integer det2(const IMatrix& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

inline Rational q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace rauzy::testing
