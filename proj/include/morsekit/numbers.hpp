#pragma once
// Exact arithmetic scalars. GMP supplies the bignum machinery; everything in
// this project that is a *claimed identity* runs on these types, never on
// floating point.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace morsekit {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Integer int_pow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// mpq_class(num, den) does not canonicalize; this does.
inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(long num, long den) {
  return make_rational(Integer(num), Integer(den));
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

inline Integer to_integer(const Rational& q) {
  if (!is_integral(q))
    throw std::domain_error("to_integer: " + q.get_str() + " is not integral");
  return q.get_num();
}

// Exact: every double is a dyadic rational.
inline Rational rational_from_double(double x) { return Rational(x); }

inline std::string to_decimal(const Integer& v) { return v.get_str(); }

}  // namespace morsekit
