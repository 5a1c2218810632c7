#include "qmat/laurent.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace qmat {

Laurent Laurent::q_power(int e, const Rational& c) {
  Laurent r;
  if (c != 0) r.terms_.emplace_back(e, c);
  return r;
}

int Laurent::min_degree() const {
  if (terms_.empty()) throw std::domain_error("degree of zero Laurent polynomial");
  return terms_.front().first;
}

int Laurent::max_degree() const {
  if (terms_.empty()) throw std::domain_error("degree of zero Laurent polynomial");
  return terms_.back().first;
}

Rational Laurent::coeff(int e) const {
  for (const auto& t : terms_)
    if (t.first == e) return t.second;
  return Rational(0);
}

Laurent& Laurent::operator+=(const Laurent& o) {
  std::vector<std::pair<int, Rational>> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  std::size_t a = 0, b = 0;
  while (a < terms_.size() || b < o.terms_.size()) {
    if (b == o.terms_.size() || (a < terms_.size() && terms_[a].first < o.terms_[b].first)) {
      merged.push_back(terms_[a++]);
    } else if (a == terms_.size() || o.terms_[b].first < terms_[a].first) {
      merged.push_back(o.terms_[b++]);
    } else {
      Rational s = terms_[a].second + o.terms_[b].second;
      if (s != 0) merged.emplace_back(terms_[a].first, s);
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) { return *this += -o; }

Laurent Laurent::operator-() const {
  Laurent r(*this);
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  std::map<int, Rational> acc;
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) acc[ta.first + tb.first] += ta.second * tb.second;
  Laurent r;
  for (const auto& [e, c] : acc)
    if (c != 0) r.terms_.emplace_back(e, c);
  return r;
}

Laurent Laurent::shifted(int k) const {
  Laurent r(*this);
  for (auto& t : r.terms_) t.first += k;
  return r;
}

Laurent Laurent::scaled(const Rational& c) const {
  if (c == 0) return Laurent();
  Laurent r(*this);
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

Laurent Laurent::divided_by_rational(const Rational& c) const {
  if (c == 0) throw std::invalid_argument("division by zero rational");
  Laurent r(*this);
  for (auto& t : r.terms_) t.second /= c;
  return r;
}

Laurent Laurent::monomial_inverse() const {
  if (terms_.size() != 1) throw std::domain_error("only q-monomials are invertible Laurent scalars");
  return q_power(-terms_[0].first, Rational(1) / terms_[0].second);
}

Rational Laurent::content() const {
  Rational g(0);
  for (const auto& t : terms_) g = rational_gcd(g, t.second);
  return g;
}

Rational Laurent::specialize(const Rational& c) const {
  if (c == 0) throw std::invalid_argument("specialization at q = 0 (q is invertible)");
  Rational acc(0);
  for (const auto& t : terms_) acc += t.second * rational_pow(c, t.first);
  return acc;
}

std::string Laurent::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rational c = it->second;
    bool neg = c < 0;
    if (first) {
      if (neg) os << '-';
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    Rational mag = neg ? Rational(-c) : c;
    os << mag.get_str() << "*q^" << it->first;
  }
  return os.str();
}

}  // namespace qmat
