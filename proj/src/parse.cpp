#include "qmat/parse.hpp"

#include <cctype>
#include <optional>

namespace qmat {

namespace {

class Parser {
 public:
  Parser(const std::string& text, AlgebraPtr alg) : text_(text), alg_(std::move(alg)) {}

  NCPoly run() {
    NCPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return normal_form(p);
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
  }

  long integer_literal() {
    skip_ws();
    std::size_t start = pos_;
    bool neg = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("expected integer", start);
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1000000) throw ParseError("integer literal too large", start);
      ++pos_;
    }
    return neg ? -v : v;
  }

  int nat_literal() {
    skip_ws();
    std::size_t start = pos_;
    long v = integer_literal();
    if (v < 0) throw ParseError("expected nonnegative integer", start);
    return static_cast<int>(v);
  }

  Rational rational_literal() {
    long num = integer_literal();
    if (accept('/')) {
      std::size_t dpos = pos_;
      long den = integer_literal();
      if (den == 0) throw ParseError("zero denominator", dpos);
      return make_rational(num, den);
    }
    return Rational(num);
  }

  NCPoly expr() {
    skip_ws();
    bool neg = accept('-');
    NCPoly p = term();
    if (neg) p = -p;
    for (;;) {
      if (accept('+'))
        p += term();
      else if (accept('-'))
        p -= term();
      else
        return p;
    }
  }

  NCPoly term() {
    NCPoly p = factor();
    while (accept('*')) p = multiply(p, factor());
    return p;
  }

  NCPoly factor() {
    skip_ws();
    std::size_t start = pos_;
    Atom a = atom();
    if (!accept('^')) return to_poly(a);
    std::size_t epos = pos_;
    long e = integer_literal();
    switch (a.kind) {
      case Atom::Kind::Scalar:
        return NCPoly::unit(alg_).scaled(Laurent(rational_pow(a.scalar, e)));
      case Atom::Kind::Q:
        return NCPoly::unit(alg_).scaled(Laurent::q_power(static_cast<int>(e)));
      default: {
        if (e < 0)
          throw ParseError("negative exponent is only allowed on q and on rationals", epos);
        NCPoly acc = NCPoly::unit(alg_);
        for (long k = 0; k < e; ++k) acc = multiply(acc, *a.poly);
        (void)start;
        return acc;
      }
    }
  }

  struct Atom {
    enum class Kind { Scalar, Q, Poly };
    Kind kind = Kind::Poly;
    Rational scalar;
    std::optional<NCPoly> poly;
  };

  NCPoly to_poly(const Atom& a) {
    switch (a.kind) {
      case Atom::Kind::Scalar:
        return NCPoly::unit(alg_).scaled(Laurent(a.scalar));
      case Atom::Kind::Q:
        return NCPoly::unit(alg_).scaled(Laurent::q_power(1));
      default:
        return *a.poly;
    }
  }

  Atom atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    Atom a;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      a.kind = Atom::Kind::Scalar;
      a.scalar = rational_literal();
      return a;
    }
    if (c == 'q') {
      ++pos_;
      a.kind = Atom::Kind::Q;
      return a;
    }
    if (c == '(') {
      ++pos_;
      a.kind = Atom::Kind::Poly;
      a.poly = expr();
      expect(')');
      return a;
    }
    if (c == 'X' || c == 'y' || c == 'z') {
      a.kind = Atom::Kind::Poly;
      a.poly = generator(c);
      return a;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  NCPoly generator(char name) {
    const std::size_t start = pos_;
    ++pos_;  // consume the name
    expect('[');
    const int first = nat_literal();
    GeneratorId id;
    if (name == 'X') {
      expect(',');
      const int second = nat_literal();
      id = GeneratorId::matrix_entry(first, second);
      if (alg_->shape() != Shape::QuantumMatrix)
        throw ParseError("X generators are only legal in a quantum matrix algebra", start);
    } else {
      if (alg_->shape() == Shape::QuantumMatrix)
        throw ParseError("y/z generators are only legal in tensor-side expressions", start);
      if (name == 'z') {
        if (alg_->shape() != Shape::TensorAffine)
          throw ParseError("z generators need a tensor algebra", start);
        id = GeneratorId::affine(alg_->tensor_split() + first);
        if (first < 1 || first > alg_->gen_count() - alg_->tensor_split())
          throw ParseError("generator z[" + std::to_string(first) + "] out of range", start);
      } else {
        id = GeneratorId::affine(first);
        if (alg_->shape() == Shape::TensorAffine &&
            (first < 1 || first > alg_->tensor_split()))
          throw ParseError("generator y[" + std::to_string(first) + "] out of range", start);
      }
    }
    expect(']');
    try {
      return NCPoly::generator(alg_, id);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), start);
    }
  }

  const std::string& text_;
  AlgebraPtr alg_;
  std::size_t pos_ = 0;
};

}  // namespace

NCPoly parse_expression(const std::string& text, const AlgebraPtr& alg) {
  return Parser(text, alg).run();
}

}  // namespace qmat
