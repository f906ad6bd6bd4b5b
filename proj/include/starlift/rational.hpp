#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace starlift {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "num" or "num/den".
inline Rational parse_rational(const std::string& s) {
  Rational r;
  try {
    r = Rational(s);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad rational literal: '" + s + "'");
  }
  if (sgn(Integer(r.get_den())) == 0)
    throw std::invalid_argument("zero denominator: '" + s + "'");
  r.canonicalize();
  return r;
}

// Lossless wire format, always "num/den" with positive denominator.
inline std::string fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// "num" when the denominator is 1, "num/den" otherwise.
inline std::string pretty_rational(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Integer factorial(unsigned long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

// a(a-1)...(a-k+1); empty product for k = 0. Never zero for negative a.
inline Integer falling_factorial(long a, unsigned long k) {
  Integer out = 1;
  for (unsigned long t = 0; t < k; ++t) out *= Integer(a - static_cast<long>(t));
  return out;
}

// binom(a, k) for arbitrary integer a; integer-valued by construction.
inline Integer generalized_binomial(long a, unsigned long k) {
  return Integer(falling_factorial(a, k) / factorial(k));
}

}  // namespace starlift
