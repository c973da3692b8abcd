#pragma once

// Shared helpers and brute-force oracles for the test binaries. The oracles
// deliberately avoid the library routines they check.

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "odo/odometer.hpp"
#include "odo/smith.hpp"

namespace odo::testing {

inline OdometerSpec geometric(GroupKind kind, long start, long ratio, std::size_t depth) {
  return OdometerSpec::make(kind, ChainSpec::geometric(start, ratio), depth, Tail::explicit_only());
}

inline OdometerSpec dihedral(long start, long ratio, std::size_t depth = 8) {
  return geometric(GroupKind::Dihedral, start, ratio, depth);
}

inline OdometerSpec explicit_chain(GroupKind kind, std::vector<long> terms,
                                   std::optional<long> tail_ratio = std::nullopt) {
  std::vector<Integer> t(terms.begin(), terms.end());
  return OdometerSpec::make(kind, ChainSpec::explicit_terms(std::move(t)), std::nullopt,
                            tail_ratio ? Tail::geometric(*tail_ratio) : Tail::explicit_only());
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo,
                               long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = dist(rng);
  return m;
}

/// Product of unimodular elementary operations.
inline IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps = 20) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) return u;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<long> factor(-3, 3);
  for (int s = 0; s < steps; ++s) {
    const std::size_t a = pick(rng), b = pick(rng);
    if (a != b) u.add_row_multiple(a, b, factor(rng));
    else u.negate_row(a);
  }
  return u;
}

inline bool is_diagonal_chain(const IntMatrix& s, std::size_t rank) {
  for (std::size_t r = 0; r < s.rows(); ++r)
    for (std::size_t c = 0; c < s.cols(); ++c)
      if (r != c && s(r, c) != 0) return false;
  const std::size_t k = std::min(s.rows(), s.cols());
  for (std::size_t i = 0; i < k; ++i) {
    if (s(i, i) < 0) return false;
    if ((i < rank) != (s(i, i) != 0)) return false;
    if (i + 1 < rank && !divides(s(i, i), s(i + 1, i + 1))) return false;
  }
  return true;
}

/// U A V = S, U and V have integer inverses, S is a divisibility chain.
inline bool snf_valid(const SmithDecomposition& d) {
  const std::size_t m = d.source.rows(), n = d.source.cols();
  return d.u * d.source * d.v == d.s && d.u * d.u_inv == IntMatrix::identity(m) &&
         d.u_inv * d.u == IntMatrix::identity(m) && d.v * d.v_inv == IntMatrix::identity(n) &&
         d.v_inv * d.v == IntMatrix::identity(n) && is_diagonal_chain(d.s, d.rank);
}

/// Cofactor expansion; only for tiny matrices.
inline Integer laplace_det(const std::vector<std::vector<Integer>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  Integer total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Integer>> sub;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Integer> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(a[r][k]);
      sub.push_back(row);
    }
    const Integer term = a[0][c] * laplace_det(sub);
    total += c % 2 == 0 ? term : Integer(-term);
  }
  return total;
}

/// gcd of all k x k minors.
inline Integer determinantal_divisor(const IntMatrix& a, std::size_t k) {
  Integer g = 0;
  std::vector<bool> rsel(a.rows(), false), csel(a.cols(), false);
  std::fill(rsel.begin(), rsel.begin() + static_cast<long>(k), true);
  do {
    std::fill(csel.begin(), csel.end(), false);
    std::fill(csel.begin(), csel.begin() + static_cast<long>(k), true);
    do {
      std::vector<std::vector<Integer>> sub;
      for (std::size_t r = 0; r < a.rows(); ++r) {
        if (!rsel[r]) continue;
        std::vector<Integer> row;
        for (std::size_t c = 0; c < a.cols(); ++c)
          if (csel[c]) row.push_back(a(r, c));
        sub.push_back(row);
      }
      g = gcd(g, laplace_det(sub));
    } while (std::prev_permutation(csel.begin(), csel.end()));
  } while (std::prev_permutation(rsel.begin(), rsel.end()));
  return g;
}

/// Fixed points of the reflection (t, 1) on Z_horizon, projected to Z_nd,
/// by enumeration.
inline std::size_t brute_reflection_count(unsigned long t, unsigned long nd, unsigned long horizon) {
  std::set<unsigned long> proj;
  for (unsigned long x = 0; x < horizon; ++x)
    if ((t + horizon - x) % horizon == x) proj.insert(x % nd);
  return proj.size();
}

inline std::size_t negation_fixed_points(std::size_t n) {
  std::size_t c = 0;
  for (std::size_t x = 0; x < n; ++x)
    if ((n - x) % n == x) ++c;
  return c;
}

}  // namespace odo::testing
