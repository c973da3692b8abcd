#include "odo/supernatural.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "odo/error.hpp"

namespace odo {

namespace {

bool is_probable_prime(const Integer& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

// Brent's variant of Pollard rho; n is odd, composite, without small factors.
Integer find_factor(const Integer& n) {
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, q = 1, g = 1, ys;
    auto step = [&](const Integer& v) { return mod_floor(v * v + c, n); };
    unsigned long r = 1;
    const unsigned long m = 64;
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = step(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = step(y);
          q = mod_floor(q * abs(x - y), n);
        }
        g = gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void collect(const Integer& n, std::map<Integer, unsigned long>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  Integer d = find_factor(n);
  collect(d, out);
  collect(n / d, out);
}

}  // namespace

std::vector<std::pair<Integer, unsigned long>> factorize(const Integer& n) {
  if (n < 1) fail(Errc::InvalidArgument, "factorize: argument must be positive");
  std::map<Integer, unsigned long> found;
  Integer rest = n;
  for (unsigned long p = 2; p < 10000 && rest > 1; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      ++found[Integer(p)];
      rest /= p;
    }
    if (Integer(p) * p > rest) break;
  }
  collect(rest, found);
  return {found.begin(), found.end()};
}

SupernaturalNumber SupernaturalNumber::from_integer(const Integer& n) {
  SupernaturalNumber s;
  s.multiply(n);
  return s;
}

SupernaturalNumber SupernaturalNumber::infinite_support_of(const Integer& n) {
  SupernaturalNumber s;
  for (const auto& [p, e] : factorize(n)) s.make_infinite(p);
  return s;
}

void SupernaturalNumber::multiply(const Integer& n) {
  for (const auto& [p, e] : factorize(n)) {
    Multiplicity& m = factors_[p];
    if (!m.infinite) m.exponent += e;
  }
}

void SupernaturalNumber::make_infinite(const Integer& prime) { factors_[prime] = Multiplicity::inf(); }

bool SupernaturalNumber::has_finite_part() const {
  return std::any_of(factors_.begin(), factors_.end(),
                     [](const auto& kv) { return !kv.second.infinite; });
}

std::vector<Integer> SupernaturalNumber::infinite_primes() const {
  std::vector<Integer> out;
  for (const auto& [p, m] : factors_)
    if (m.infinite) out.push_back(p);
  return out;
}

std::string SupernaturalNumber::to_string() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, m] : factors_) {
    if (!first) os << " * ";
    first = false;
    os << p;
    if (m.infinite) os << "^inf";
    else if (m.exponent != 1) os << '^' << m.exponent;
  }
  return os.str();
}

SupernaturalNumber SupernaturalNumber::parse(std::string_view text) {
  std::string compact;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
  SupernaturalNumber s;
  if (compact == "1") return s;
  if (compact.empty()) fail(Errc::InvalidArgument, "empty supernatural number");
  std::size_t pos = 0;
  while (pos <= compact.size()) {
    std::size_t end = compact.find('*', pos);
    if (end == std::string::npos) end = compact.size();
    const std::string term = compact.substr(pos, end - pos);
    const std::size_t caret = term.find('^');
    const std::string base = term.substr(0, caret);
    Integer p;
    if (base.empty() || p.set_str(base, 10) != 0 || p < 2 || !is_probable_prime(p))
      fail(Errc::InvalidArgument, "bad prime in supernatural number: " + term);
    if (caret == std::string::npos) {
      s.multiply(p);
    } else {
      const std::string exp = term.substr(caret + 1);
      if (exp == "inf") {
        s.make_infinite(p);
      } else {
        Integer e;
        if (exp.empty() || e.set_str(exp, 10) != 0 || e < 0 || !e.fits_ulong_p())
          fail(Errc::InvalidArgument, "bad exponent in supernatural number: " + term);
        if (e > 0) s.multiply(pow_ui(p, e.get_ui()));
      }
    }
    pos = end + 1;
  }
  return s;
}

bool supernatural_iso_equal(const SupernaturalNumber& a, const SupernaturalNumber& b) {
  return a.infinite_primes() == b.infinite_primes();
}

}  // namespace odo
