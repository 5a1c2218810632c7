#pragma once
// Fraction field of the q-Laurent scalars, used by the truncated linear
// algebra. Fractions are kept reduced with a monic denominator of lowest
// degree zero; the q-power part always lives in the numerator.

#include "qmat/laurent.hpp"

namespace qmat {

// gcd of the underlying Q[q] polynomials (q-power units divided out),
// primitive with positive leading coefficient; gcd(0,0) = 0.
Laurent poly_gcd(const Laurent& a, const Laurent& b);

// Exact division; throws std::domain_error when b does not divide a.
Laurent divide_exact(const Laurent& a, const Laurent& b);

class RatScalar {
 public:
  RatScalar() : num_(), den_(1) {}
  RatScalar(Laurent n) : num_(std::move(n)), den_(1) {}
  RatScalar(const Rational& c) : num_(c), den_(1) {}
  RatScalar(long c) : num_(c), den_(1) {}
  RatScalar(Laurent n, Laurent d);

  const Laurent& num() const { return num_; }
  const Laurent& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatScalar operator+(const RatScalar& o) const { return RatScalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
  RatScalar operator-(const RatScalar& o) const { return RatScalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_); }
  RatScalar operator*(const RatScalar& o) const { return RatScalar(num_ * o.num_, den_ * o.den_); }
  RatScalar operator/(const RatScalar& o) const;
  RatScalar operator-() const { return RatScalar(-num_, den_); }
  RatScalar& operator+=(const RatScalar& o) { return *this = *this + o; }
  RatScalar& operator-=(const RatScalar& o) { return *this = *this - o; }
  RatScalar& operator*=(const RatScalar& o) { return *this = *this * o; }

  // Cross-multiplication equality.
  bool operator==(const RatScalar& o) const { return num_ * o.den_ == o.num_ * den_; }
  bool operator!=(const RatScalar& o) const { return !(*this == o); }

  Rational specialize(const Rational& c) const;

  std::string str() const;

 private:
  void normalize();
  Laurent num_, den_;
};

}  // namespace qmat
