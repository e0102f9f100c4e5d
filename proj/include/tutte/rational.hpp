#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace tutte {

using Integer = mpz_class;
using Rational = mpq_class;

/// Thrown when a computation would exceed a configured size bound.
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Builds a canonical rational. gmp does not reduce p/q on construction,
/// so all entry points that create rationals from raw parts go through here.
inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(Integer(num), Integer(den));
}

/// Parses "p", "-p" or "p/q" in base 10. Whitespace is not accepted.
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  for (char ch : text) {
    bool ok = (ch >= '0' && ch <= '9') || ch == '-' || ch == '+' || ch == '/';
    if (!ok) throw std::invalid_argument("bad rational literal: " + text);
  }
  Rational r;
  if (r.set_str(text, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + text);
  if (r.get_den() == 0)
    throw std::invalid_argument("rational with zero denominator: " + text);
  r.canonicalize();
  return r;
}

/// Canonical text: plain integer when the denominator is 1, else "p/q".
inline std::string rational_str(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Integer binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return Integer(0);
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return b;
}

inline Integer factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative argument");
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

}  // namespace tutte
