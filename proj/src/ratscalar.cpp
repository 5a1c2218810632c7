#include "qmat/ratscalar.hpp"

#include <stdexcept>
#include <vector>

namespace qmat {

namespace {

// Dense coefficient vector of a Laurent value divided by q^shift, ascending
// from exponent 0.
std::vector<Rational> to_dense(const Laurent& a, int& shift) {
  std::vector<Rational> v;
  if (a.is_zero()) {
    shift = 0;
    return v;
  }
  shift = a.min_degree();
  v.assign(static_cast<std::size_t>(a.max_degree() - shift) + 1, Rational(0));
  for (const auto& [e, c] : a.terms()) v[static_cast<std::size_t>(e - shift)] = c;
  return v;
}

Laurent from_dense(const std::vector<Rational>& v, int shift) {
  Laurent r;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k] != 0) r += Laurent::q_power(shift + static_cast<int>(k), v[k]);
  return r;
}

void trim(std::vector<Rational>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

// Remainder of a by b over Q[q]; b nonzero.
std::vector<Rational> poly_mod(std::vector<Rational> a, const std::vector<Rational>& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    std::size_t off = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[off + k] -= f * b[k];
    trim(a);
  }
  return a;
}

Laurent make_primitive(std::vector<Rational> v) {
  trim(v);
  if (v.empty()) return Laurent();
  Rational cont(0);
  for (const auto& c : v) cont = rational_gcd(cont, c);
  if (v.back() < 0) cont = -cont;
  for (auto& c : v) c /= cont;
  return from_dense(v, 0);
}

}  // namespace

Laurent poly_gcd(const Laurent& a, const Laurent& b) {
  int sa = 0, sb = 0;
  std::vector<Rational> x = to_dense(a, sa), y = to_dense(b, sb);
  while (!y.empty()) {
    std::vector<Rational> r = poly_mod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return make_primitive(std::move(x));
}

Laurent divide_exact(const Laurent& a, const Laurent& b) {
  if (b.is_zero()) throw std::domain_error("division by zero Laurent polynomial");
  if (a.is_zero()) return Laurent();
  int sa = 0, sb = 0;
  std::vector<Rational> x = to_dense(a, sa);
  const std::vector<Rational> y = to_dense(b, sb);
  if (x.size() < y.size()) throw std::domain_error("inexact Laurent division");
  std::vector<Rational> quot(x.size() - y.size() + 1, Rational(0));
  while (x.size() >= y.size() && !x.empty()) {
    Rational f = x.back() / y.back();
    std::size_t off = x.size() - y.size();
    quot[off] = f;
    for (std::size_t k = 0; k < y.size(); ++k) x[off + k] -= f * y[k];
    trim(x);
  }
  if (!x.empty()) throw std::domain_error("inexact Laurent division");
  return from_dense(quot, sa - sb);
}

RatScalar::RatScalar(Laurent n, Laurent d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

void RatScalar::normalize() {
  if (den_.is_zero()) throw std::invalid_argument("q-rational with zero denominator");
  if (num_.is_zero()) {
    den_ = Laurent(1);
    return;
  }
  int sn = num_.min_degree(), sd = den_.min_degree();
  Laurent n = num_.shifted(-sn), d = den_.shifted(-sd);
  Laurent g = poly_gcd(n, d);
  if (!g.is_one()) {
    n = divide_exact(n, g);
    d = divide_exact(d, g);
  }
  Rational lead = d.terms().back().second;
  if (lead != 1) {
    n = n.divided_by_rational(lead);
    d = d.divided_by_rational(lead);
  }
  num_ = n.shifted(sn - sd);
  den_ = std::move(d);
}

RatScalar RatScalar::operator/(const RatScalar& o) const {
  if (o.is_zero()) throw std::invalid_argument("division by zero q-rational");
  return RatScalar(num_ * o.den_, den_ * o.num_);
}

Rational RatScalar::specialize(const Rational& c) const {
  Rational d = den_.specialize(c);
  if (d == 0) throw std::domain_error("denominator vanishes at the chosen specialization");
  return num_.specialize(c) / d;
}

std::string RatScalar::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace qmat
