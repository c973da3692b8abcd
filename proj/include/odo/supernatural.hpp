#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "odo/integer.hpp"

namespace odo {

/// Prime factorization of n >= 1, primes ascending.
std::vector<std::pair<Integer, unsigned long>> factorize(const Integer& n);

/// Exponent of a prime in a supernatural number; `infinite` wins over `exponent`.
struct Multiplicity {
  bool infinite = false;
  unsigned long exponent = 0;

  static Multiplicity finite(unsigned long e) { return {false, e}; }
  static Multiplicity inf() { return {true, 0}; }
  friend bool operator==(const Multiplicity&, const Multiplicity&) = default;
};

/// A formal product of primes with multiplicities in N ∪ {∞}. Represents the
/// rank-1 group {m/n : n divides this number} ⊂ Q.
class SupernaturalNumber {
 public:
  SupernaturalNumber() = default;

  static SupernaturalNumber from_integer(const Integer& n);
  /// p^∞ for every prime p dividing n.
  static SupernaturalNumber infinite_support_of(const Integer& n);
  /// Parses the serialized form, e.g. "2^inf * 3^2" or "1".
  static SupernaturalNumber parse(std::string_view text);

  void multiply(const Integer& n);
  void make_infinite(const Integer& prime);

  /// Only primes with nonzero multiplicity are stored.
  const std::map<Integer, Multiplicity>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  bool has_finite_part() const;
  std::vector<Integer> infinite_primes() const;

  /// "2^inf * 3^2"; "1" for the trivial number.
  std::string to_string() const;

  friend bool operator==(const SupernaturalNumber&, const SupernaturalNumber&) = default;

 private:
  std::map<Integer, Multiplicity> factors_;
};

/// The represented rank-1 groups are isomorphic iff the sets of primes with
/// infinite multiplicity agree; finite multiplicities only rescale.
bool supernatural_iso_equal(const SupernaturalNumber& a, const SupernaturalNumber& b);

}  // namespace odo
