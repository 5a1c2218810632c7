#include "qmat/serialize.hpp"

#include <algorithm>
#include <sstream>

namespace qmat {

namespace {

// One Laurent term without sign, e.g. "q", "q^-2", "3/2*q^2", "3/2".
std::string term_body(int e, const Rational& mag) {
  std::string out;
  const bool unit_coeff = mag == 1;
  if (!unit_coeff || e == 0) out += mag.get_str();
  if (e != 0) {
    if (!out.empty()) out += "*";
    out += e == 1 ? "q" : "q^" + std::to_string(e);
  }
  return out;
}

}  // namespace

std::string pretty_laurent(const Laurent& c) {
  if (c.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& ts = c.terms();
  for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
    const bool neg = it->second < 0;
    if (first) {
      if (neg) os << '-';
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    os << term_body(it->first, neg ? Rational(-it->second) : it->second);
  }
  return os.str();
}

std::string to_pretty(const NCPoly& p) {
  auto terms = p.sorted_terms();
  std::reverse(terms.begin(), terms.end());  // ascending word order reads like the algebra
  if (terms.empty()) return "0";
  const Algebra& A = *p.algebra();
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms) {
    std::string word;
    for (Gen g : w) {
      if (!word.empty()) word += "*";
      word += A.gen_name(g);
    }
    if (c.is_monomial()) {
      const auto& [e, r] = c.terms().front();
      const bool neg = r < 0;
      if (first) {
        if (neg) os << '-';
        first = false;
      } else {
        os << (neg ? " - " : " + ");
      }
      const std::string body = term_body(e, neg ? Rational(-r) : r);
      if (word.empty())
        os << (body.empty() ? "1" : body);
      else if (body.empty() || (e == 0 && (neg ? Rational(-r) : r) == 1))
        os << word;
      else
        os << body << "*" << word;
    } else {
      if (!first) os << " + ";
      first = false;
      if (word.empty())
        os << pretty_laurent(c);
      else
        os << "(" << pretty_laurent(c) << ")*" << word;
    }
  }
  return os.str();
}

nlohmann::json word_to_json(const Algebra& alg, const Word& w) {
  nlohmann::json out = nlohmann::json::array();
  if (alg.shape() == Shape::QuantumMatrix) {
    for (Gen g : w) {
      const GeneratorId id = alg.gen_id(g);
      out.push_back({id.i, id.j});
    }
  } else {
    for (Gen g : w) out.push_back(g + 1);
  }
  return out;
}

nlohmann::json poly_to_json(const NCPoly& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [w, c] : p.sorted_terms())
    out.push_back({{"word", word_to_json(*p.algebra(), w)}, {"coeff", c.str()}});
  return out;
}

}  // namespace qmat
