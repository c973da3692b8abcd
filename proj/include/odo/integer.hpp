#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace odo {

/// Arbitrary-precision signed integer used for every exact computation.
using Integer = mpz_class;

/// Least nonnegative residue of `a` modulo `m` (m > 0).
inline Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

/// Floor division a / m.
inline Integer div_floor(const Integer& a, const Integer& m) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return q;
}

inline bool divides(const Integer& d, const Integer& a) {
  if (d == 0) return a == 0;
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer pow_ui(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline bool is_odd(const Integer& a) { return mpz_odd_p(a.get_mpz_t()) != 0; }

inline std::string to_string(const Integer& a) { return a.get_str(); }

/// Converts to `std::size_t`; returns false when the value does not fit.
/// |a| < |b|
inline bool abs_less(const Integer& a, const Integer& b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0;
}

inline bool to_size(const Integer& a, std::size_t& out) {
  if (a < 0 || !a.fits_ulong_p()) return false;
  out = static_cast<std::size_t>(a.get_ui());
  return true;
}

}  // namespace odo
