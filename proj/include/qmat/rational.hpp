#pragma once
// Exact rational arithmetic, a thin layer over GMP's mpq_class. Every scalar
// in the library that is not a Laurent polynomial in q is one of these.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qmat {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "3", "-3", "3/2".
inline Rational rational_from_string(const std::string& s) {
  Rational r;
  try {
    r = Rational(s, 10);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad rational literal: '" + s + "'");
  }
  if (r.get_den() == 0) throw std::invalid_argument("rational with zero denominator: '" + s + "'");
  r.canonicalize();
  return r;
}

inline std::string rational_to_string(const Rational& r) { return r.get_str(); }

// c^e for integer e; negative e requires c != 0.
inline Rational rational_pow(const Rational& c, long e) {
  if (e == 0) return Rational(1);
  if (c == 0) {
    if (e < 0) throw std::invalid_argument("inverse of zero");
    return Rational(0);
  }
  unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1ul : static_cast<unsigned long>(e);
  mpz_class np, dp;
  mpz_pow_ui(np.get_mpz_t(), c.get_num().get_mpz_t(), k);
  mpz_pow_ui(dp.get_mpz_t(), c.get_den().get_mpz_t(), k);
  Rational r = e < 0 ? Rational(dp, np) : Rational(np, dp);
  r.canonicalize();
  return r;
}

// Nonnegative gcd: gcd of numerators over lcm of denominators.
inline Rational rational_gcd(const Rational& a, const Rational& b) {
  mpz_class g, l;
  mpz_gcd(g.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
  mpz_lcm(l.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
  if (l == 0) return Rational(0);
  Rational r(g, l);
  r.canonicalize();
  return r;
}

}  // namespace qmat
