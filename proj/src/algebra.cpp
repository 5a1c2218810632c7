#include "qmat/algebra.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qmat {

// Factory helper: Algebra has a private constructor, so allocate through a
// local derived type.
static std::shared_ptr<Algebra> make_algebra() {
  struct A : Algebra {
    A() : Algebra() {}
  };
  return std::make_shared<A>();
}

AlgebraPtr Algebra::quantum_matrix(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("quantum matrix algebra needs m, n >= 1");
  auto a = make_algebra();
  a->shape_ = Shape::QuantumMatrix;
  a->m_ = m;
  a->n_ = n;
  a->gen_count_ = m * n;
  a->intern(Word{});
  return a;
}

AlgebraPtr Algebra::quantum_affine(int dim) {
  if (dim < 1) throw std::invalid_argument("quantum affine space needs dimension >= 1");
  std::vector<std::vector<Laurent>> lambda(dim, std::vector<Laurent>(dim));
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) lambda[i][j] = Laurent::q_power(1);
  return quantum_affine_multi(dim, std::move(lambda));
}

AlgebraPtr Algebra::quantum_affine_multi(int dim, std::vector<std::vector<Laurent>> lambda) {
  if (dim < 1) throw std::invalid_argument("quantum affine space needs dimension >= 1");
  if (lambda.size() != static_cast<std::size_t>(dim))
    throw std::invalid_argument("parameter matrix size mismatch");
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      if (!lambda[i][j].is_monomial())
        throw std::invalid_argument("commutation parameters must be invertible q-monomials");
  auto a = make_algebra();
  a->shape_ = Shape::QuantumAffine;
  a->gen_count_ = dim;
  a->lambda_ = std::move(lambda);
  a->intern(Word{});
  return a;
}

AlgebraPtr Algebra::tensor_affine(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("tensor algebra needs m, n >= 1");
  const int dim = m + n;
  std::vector<std::vector<Laurent>> lambda(dim, std::vector<Laurent>(dim));
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      const bool same_side = (i < m) == (j < m);
      lambda[i][j] = same_side ? Laurent::q_power(1) : Laurent(1);
    }
  auto a = make_algebra();
  a->shape_ = Shape::TensorAffine;
  a->m_ = m;
  a->n_ = n;
  a->gen_count_ = dim;
  a->lambda_ = std::move(lambda);
  a->intern(Word{});
  return a;
}

int Algebra::rows() const {
  if (shape_ != Shape::QuantumMatrix) throw std::logic_error("rows(): not a quantum matrix algebra");
  return m_;
}

int Algebra::cols() const {
  if (shape_ != Shape::QuantumMatrix) throw std::logic_error("cols(): not a quantum matrix algebra");
  return n_;
}

int Algebra::tensor_split() const {
  if (shape_ != Shape::TensorAffine) throw std::logic_error("tensor_split(): not a tensor algebra");
  return m_;
}

Gen Algebra::gen_ordinal(const GeneratorId& id) const {
  if (shape_ == Shape::QuantumMatrix) {
    if (id.kind != GeneratorId::Kind::MatrixEntry)
      throw std::invalid_argument("matrix algebra has only X[i,j] generators");
    if (id.i < 1 || id.i > m_ || id.j < 1 || id.j > n_)
      throw std::invalid_argument("generator X[" + std::to_string(id.i) + "," + std::to_string(id.j) +
                                  "] out of range for O_q(M_{" + std::to_string(m_) + "," +
                                  std::to_string(n_) + "})");
    return static_cast<Gen>((id.i - 1) * n_ + (id.j - 1));
  }
  if (id.kind != GeneratorId::Kind::Affine)
    throw std::invalid_argument("affine algebra has only indexed generators");
  if (id.i < 1 || id.i > gen_count_)
    throw std::invalid_argument("affine generator index " + std::to_string(id.i) + " out of range");
  return static_cast<Gen>(id.i - 1);
}

GeneratorId Algebra::gen_id(Gen g) const {
  if (g >= gen_count_) throw std::invalid_argument("generator ordinal out of range");
  if (shape_ == Shape::QuantumMatrix) return GeneratorId::matrix_entry(g / n_ + 1, g % n_ + 1);
  return GeneratorId::affine(g + 1);
}

std::string Algebra::gen_name(Gen g) const {
  if (g >= gen_count_) throw std::invalid_argument("generator ordinal out of range");
  switch (shape_) {
    case Shape::QuantumMatrix:
      return "X[" + std::to_string(g / n_ + 1) + "," + std::to_string(g % n_ + 1) + "]";
    case Shape::TensorAffine:
      if (g < m_) return "y[" + std::to_string(g + 1) + "]";
      return "z[" + std::to_string(g - m_ + 1) + "]";
    case Shape::QuantumAffine:
      return "y[" + std::to_string(g + 1) + "]";
  }
  return {};
}

const Laurent& Algebra::lambda(Gen a, Gen b) const {
  if (shape_ == Shape::QuantumMatrix) throw std::logic_error("lambda(): not an affine shape");
  if (!(a < b) || b >= gen_count_) throw std::logic_error("lambda(): need ordinals a < b in range");
  return lambda_[a][b];
}

bool Algebra::same_presentation(const Algebra& o) const {
  if (shape_ != o.shape_ || m_ != o.m_ || n_ != o.n_ || gen_count_ != o.gen_count_) return false;
  return lambda_ == o.lambda_;
}

WordId Algebra::intern(const Word& w) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = index_.find(w);
  if (it != index_.end()) return it->second;
  const WordId id = static_cast<WordId>(words_.size());
  words_.push_back(w);
  index_.emplace(words_.back(), id);
  return id;
}

const Word& Algebra::word(WordId id) const {
  std::lock_guard<std::mutex> lock(mu_);
  if (id >= words_.size()) throw std::logic_error("unknown word id");
  return words_[id];
}

NCPoly::NCPoly(AlgebraPtr alg) : alg_(std::move(alg)) {
  if (!alg_) throw std::invalid_argument("null algebra");
}

NCPoly NCPoly::monomial(const AlgebraPtr& alg, const Word& w, const Laurent& c) {
  NCPoly p(alg);
  for (Gen g : w)
    if (g >= alg->gen_count()) throw std::invalid_argument("word contains out-of-range generator");
  p.add_term(alg->intern(w), c);
  return p;
}

NCPoly NCPoly::generator(const AlgebraPtr& alg, const GeneratorId& id) {
  return monomial(alg, Word{alg->gen_ordinal(id)});
}

void NCPoly::add_term(WordId w, const Laurent& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void NCPoly::add_word(const Word& w, const Laurent& c) { add_term(alg_->intern(w), c); }

Laurent NCPoly::coeff(const Word& w) const {
  auto it = terms_.find(alg_->intern(w));
  return it == terms_.end() ? Laurent() : it->second;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  if (alg_.get() == o.alg_.get()) {
    for (const auto& [id, c] : o.terms_) add_term(id, c);
    return *this;
  }
  if (!alg_->same_presentation(*o.alg_)) throw std::invalid_argument("algebra mismatch");
  for (const auto& [id, c] : o.terms_) add_word(o.alg_->word(id), c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) { return *this += -o; }

NCPoly NCPoly::operator-() const {
  NCPoly r(alg_);
  for (const auto& [id, c] : terms_) r.terms_.emplace(id, -c);
  return r;
}

NCPoly NCPoly::scaled(const Laurent& c) const {
  NCPoly r(alg_);
  if (c.is_zero()) return r;
  for (const auto& [id, coeff] : terms_) r.terms_.emplace(id, coeff * c);
  return r;
}

bool NCPoly::operator==(const NCPoly& o) const {
  if (!alg_->same_presentation(*o.alg_)) return false;
  if (alg_.get() == o.alg_.get()) return terms_ == o.terms_;
  return sorted_terms() == o.sorted_terms();
}

std::vector<std::pair<Word, Laurent>> NCPoly::sorted_terms() const {
  std::vector<std::pair<Word, Laurent>> out;
  out.reserve(terms_.size());
  for (const auto& [id, c] : terms_) out.emplace_back(alg_->word(id), c);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return b.first < a.first; });
  return out;
}

bool NCPoly::is_canonical() const {
  for (const auto& [id, c] : terms_) {
    (void)c;
    const Word& w = alg_->word(id);
    if (!std::is_sorted(w.begin(), w.end())) return false;
  }
  return true;
}

int NCPoly::max_word_length() const {
  std::size_t len = 0;
  for (const auto& [id, c] : terms_) {
    (void)c;
    len = std::max(len, alg_->word(id).size());
  }
  return static_cast<int>(len);
}

namespace {

// One rewriting step on the descending adjacent pair at position p. Every
// produced word is strictly smaller than w in the fixed-length lexicographic
// order, which gives termination and lets the caller process pending words
// largest-first without revisiting.
void rewrite_at(const Algebra& A, const Word& w, std::size_t p,
                std::vector<std::pair<Word, Laurent>>& out) {
  const Gen a = w[p], b = w[p + 1];  // a > b
  if (A.shape() == Shape::QuantumMatrix) {
    const int n = A.cols();
    const int i1 = a / n + 1, j1 = a % n + 1;
    const int i2 = b / n + 1, j2 = b % n + 1;
    Word swapped(w);
    std::swap(swapped[p], swapped[p + 1]);
    if (i1 == i2 || j1 == j2) {
      out.emplace_back(std::move(swapped), Laurent::q_power(-1));
    } else if (j1 < j2) {  // i1 > i2: the two generators commute
      out.emplace_back(std::move(swapped), Laurent(1));
    } else {  // i1 > i2 and j1 > j2
      out.emplace_back(std::move(swapped), Laurent(1));
      Word replaced(w);
      replaced[p] = static_cast<Gen>((i2 - 1) * n + (j1 - 1));
      replaced[p + 1] = static_cast<Gen>((i1 - 1) * n + (j2 - 1));
      out.emplace_back(std::move(replaced), Laurent::q_power(-1) - Laurent::q_power(1));
    }
    return;
  }
  // Affine shapes: y_b y_a = lambda(a,b)^{-1} y_a y_b for a < b.
  Word swapped(w);
  std::swap(swapped[p], swapped[p + 1]);
  out.emplace_back(std::move(swapped), A.lambda(b, a).monomial_inverse());
}

}  // namespace

NCPoly normal_form(const NCPoly& p, RewriteStrategy strategy) {
  const Algebra& A = *p.algebra();
  NCPoly out(p.algebra());
  std::map<Word, Laurent> pending;
  for (const auto& [id, c] : p.terms()) {
    auto [it, fresh] = pending.emplace(A.word(id), c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) pending.erase(it);
    }
  }
  std::vector<std::pair<Word, Laurent>> produced;
  while (!pending.empty()) {
    auto top = std::prev(pending.end());
    Word w = top->first;
    Laurent c = std::move(top->second);
    pending.erase(top);

    std::size_t pos = w.size();
    if (strategy == RewriteStrategy::Leftmost) {
      for (std::size_t k = 0; k + 1 < w.size(); ++k)
        if (w[k] > w[k + 1]) {
          pos = k;
          break;
        }
    } else {
      for (std::size_t k = w.size(); k-- > 1;)
        if (w[k - 1] > w[k]) {
          pos = k - 1;
          break;
        }
    }
    if (pos == w.size()) {
      out.add_word(w, c);
      continue;
    }
    produced.clear();
    rewrite_at(A, w, pos, produced);
    for (auto& [nw, nc] : produced) {
      nc *= c;
      auto [it, fresh] = pending.emplace(std::move(nw), nc);
      if (!fresh) {
        it->second += nc;
        if (it->second.is_zero()) pending.erase(it);
      }
    }
  }
  return out;
}

NCPoly multiply(const NCPoly& a, const NCPoly& b) {
  if (a.algebra().get() != b.algebra().get() && !a.algebra()->same_presentation(*b.algebra()))
    throw std::invalid_argument("algebra mismatch in product");
  const Algebra& A = *a.algebra();
  const Algebra& B = *b.algebra();
  NCPoly raw(a.algebra());
  for (const auto& [ia, ca] : a.terms()) {
    const Word& wa = A.word(ia);
    for (const auto& [ib, cb] : b.terms()) {
      const Word& wb = B.word(ib);
      Word w;
      w.reserve(wa.size() + wb.size());
      w.insert(w.end(), wa.begin(), wa.end());
      w.insert(w.end(), wb.begin(), wb.end());
      raw.add_word(w, ca * cb);
    }
  }
  return normal_form(raw);
}

std::uint64_t component_dimension(const Algebra& alg, int degree) {
  if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(alg.gen_count() + degree - 1),
               static_cast<unsigned long>(degree));
  if (!b.fits_ulong_p()) throw std::overflow_error("component dimension overflows");
  return static_cast<std::uint64_t>(b.get_ui());
}

NCPoly specialize_poly(const NCPoly& p, const Rational& c) {
  if (c == 0) throw std::invalid_argument("specialization at q = 0 (q is invertible)");
  NCPoly out(p.algebra());
  for (const auto& [id, coeff] : p.terms()) out.add_term(id, Laurent(coeff.specialize(c)));
  return out;
}

}  // namespace qmat
