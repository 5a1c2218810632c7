#pragma once
// Presented algebras with PBW normal forms: quantum m×n matrices,
// (multiparameter) quantum affine spaces, and the tensor product of two
// standard quantum affine spaces. Elements are finitely supported maps from
// interned words to q-Laurent coefficients; the canonical form of an element
// is supported on non-decreasing words only.

#include "qmat/laurent.hpp"

#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace qmat {

using Gen = std::uint16_t;     // dense per-algebra ordinal; ordinals carry the PBW order
using Word = std::vector<Gen>;
using WordId = std::uint32_t;

struct GeneratorId {
  enum class Kind { MatrixEntry, Affine };
  Kind kind = Kind::Affine;
  int i = 0;  // row index, or affine index
  int j = 0;  // column index (matrix entries only)

  static GeneratorId matrix_entry(int i, int j) { return {Kind::MatrixEntry, i, j}; }
  static GeneratorId affine(int index) { return {Kind::Affine, index, 0}; }
  bool operator==(const GeneratorId& o) const { return kind == o.kind && i == o.i && j == o.j; }
};

enum class Shape { QuantumMatrix, QuantumAffine, TensorAffine };

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = 1469598103934665603ull;
    for (Gen g : w) {
      h ^= g;
      h *= 1099511628211ull;
    }
    return h;
  }
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

class Algebra {
 public:
  // O_q(M_{m,n}): generators X[i,j], ordered lexicographically on (i,j).
  static AlgebraPtr quantum_matrix(int m, int n);
  // O_q(k^dim): y_a y_b = q y_b y_a for a < b.
  static AlgebraPtr quantum_affine(int dim);
  // Multiparameter quantum affine space; lambda[a][b] for 0-based a < b must
  // be invertible, i.e. a nonzero q-monomial.
  static AlgebraPtr quantum_affine_multi(int dim, std::vector<std::vector<Laurent>> lambda);
  // O_q(k^m) ⊗ O_q(k^n), presented as quantum affine (m+n)-space with
  // parameter q between same-side pairs and 1 across sides.
  static AlgebraPtr tensor_affine(int m, int n);

  Shape shape() const { return shape_; }
  int rows() const;          // QuantumMatrix only
  int cols() const;          // QuantumMatrix only
  int tensor_split() const;  // TensorAffine only: number of y generators
  int gen_count() const { return gen_count_; }

  Gen gen_ordinal(const GeneratorId& id) const;  // validates kind and range
  GeneratorId gen_id(Gen g) const;
  std::string gen_name(Gen g) const;  // "X[i,j]", "y[k]", "z[k]"

  // Commutation parameter for an affine shape: y_a y_b = lambda(a,b) y_b y_a
  // for ordinals a < b.
  const Laurent& lambda(Gen a, Gen b) const;

  bool same_presentation(const Algebra& o) const;

  WordId intern(const Word& w) const;
  const Word& word(WordId id) const;

 protected:
  Algebra() = default;

 private:
  Shape shape_ = Shape::QuantumAffine;
  int m_ = 0, n_ = 0;  // matrix dims, or tensor side dims
  int gen_count_ = 0;
  std::vector<std::vector<Laurent>> lambda_;  // affine shapes: full upper triangle

  mutable std::mutex mu_;
  mutable std::deque<Word> words_;
  mutable std::unordered_map<Word, WordId, WordHash> index_;
};

class NCPoly {
 public:
  explicit NCPoly(AlgebraPtr alg);
  static NCPoly unit(const AlgebraPtr& alg) { return monomial(alg, Word{}); }
  static NCPoly monomial(const AlgebraPtr& alg, const Word& w, const Laurent& c = Laurent(1));
  static NCPoly generator(const AlgebraPtr& alg, const GeneratorId& id);

  const AlgebraPtr& algebra() const { return alg_; }
  const std::unordered_map<WordId, Laurent>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(WordId w, const Laurent& c);
  void add_word(const Word& w, const Laurent& c);
  Laurent coeff(const Word& w) const;
  Laurent constant_coeff() const { return coeff(Word{}); }

  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) {
    a += b;
    return a;
  }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) {
    a -= b;
    return a;
  }
  NCPoly operator-() const;
  NCPoly scaled(const Laurent& c) const;

  // Structural equality of term maps over equal presentations. Meaningful on
  // canonical operands.
  bool operator==(const NCPoly& o) const;
  bool operator!=(const NCPoly& o) const { return !(*this == o); }

  // Terms in descending lexicographic order of generator sequences — the
  // serialization order.
  std::vector<std::pair<Word, Laurent>> sorted_terms() const;
  bool is_canonical() const;  // all supported words non-decreasing
  int max_word_length() const;

 private:
  AlgebraPtr alg_;
  std::unordered_map<WordId, Laurent> terms_;
};

enum class RewriteStrategy { Leftmost, Rightmost };

// Unique canonical form supported on non-decreasing words. Both strategies
// pick which descending adjacent pair to rewrite first; they must agree
// (confluence), which the test suite fuzzes.
NCPoly normal_form(const NCPoly& p, RewriteStrategy strategy = RewriteStrategy::Leftmost);

// Canonical product; rejects operands over different presentations.
NCPoly multiply(const NCPoly& a, const NCPoly& b);

// Number of non-decreasing words of length d: C(g + d - 1, d).
std::uint64_t component_dimension(const Algebra& alg, int degree);

// Coefficientwise evaluation at q = c (c != 0); result has constant
// coefficients.
NCPoly specialize_poly(const NCPoly& p, const Rational& c);

}  // namespace qmat
