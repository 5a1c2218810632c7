#pragma once
// Laurent polynomials in the quantum parameter q with exact rational
// coefficients. Zero is the empty term list; no zero coefficient is ever
// stored, so equality is structural.

#include "qmat/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qmat {

class Laurent {
 public:
  Laurent() = default;
  Laurent(const Rational& c) {
    if (c != 0) terms_.emplace_back(0, c);
  }
  Laurent(long c) : Laurent(Rational(c)) {}

  // c * q^e
  static Laurent q_power(int e, const Rational& c = Rational(1));

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1; }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }

  int min_degree() const;  // lowest q-exponent; nonzero values only
  int max_degree() const;
  Rational coeff(int e) const;

  // Terms in ascending exponent order.
  const std::vector<std::pair<int, Rational>>& terms() const { return terms_; }

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o) {
    *this = *this * o;
    return *this;
  }
  friend Laurent operator+(Laurent a, const Laurent& b) {
    a += b;
    return a;
  }
  friend Laurent operator-(Laurent a, const Laurent& b) {
    a -= b;
    return a;
  }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  Laurent operator-() const;
  bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
  bool operator!=(const Laurent& o) const { return !(*this == o); }

  Laurent shifted(int k) const;  // multiply by q^k
  Laurent scaled(const Rational& c) const;
  Laurent divided_by_rational(const Rational& c) const;
  Laurent monomial_inverse() const;  // single-term values only
  Rational content() const;          // nonnegative gcd of coefficients; 0 for zero

  // Evaluate at q = c; rejects c = 0 since q is invertible.
  Rational specialize(const Rational& c) const;

  // Canonical textual form: "<rational>*q^<int>" terms, exponents descending,
  // e.g. "1*q^2 - 1*q^-2". Zero prints as "0".
  std::string str() const;

 private:
  std::vector<std::pair<int, Rational>> terms_;  // ascending exponent, no zeros
};

inline Laurent laurent_q() { return Laurent::q_power(1); }

}  // namespace qmat
