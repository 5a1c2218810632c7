#include "qmat/oracle.hpp"

#include "qmat/detid.hpp"
#include "qmat/maps.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qmat {

namespace {

void check_caps(int m, int n, int d, const OracleCaps& caps) {
  if (m < 1 || n < 1 || d < 0) throw std::invalid_argument("need m, n >= 1 and d >= 0");
  if (m > caps.max_m || n > caps.max_n || d > caps.max_d)
    throw CapExceeded("oracle case (m=" + std::to_string(m) + ", n=" + std::to_string(n) +
                      ", d=" + std::to_string(d) + ") exceeds configured caps (" +
                      std::to_string(caps.max_m) + ", " + std::to_string(caps.max_n) + ", " +
                      std::to_string(caps.max_d) + ")");
}

void enumerate_words(int gens, int length, Word& cur, std::vector<Word>& out) {
  if (static_cast<int>(cur.size()) == length) {
    out.push_back(cur);
    return;
  }
  const Gen lo = cur.empty() ? 0 : cur.back();
  for (Gen g = lo; g < gens; ++g) {
    cur.push_back(g);
    enumerate_words(gens, length, cur, out);
    cur.pop_back();
  }
}

std::uint64_t s_count(int m, int n, int d) {
  mpz_class a, b;
  mpz_bin_uiui(a.get_mpz_t(), static_cast<unsigned long>(m + d - 1), static_cast<unsigned long>(d));
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n + d - 1), static_cast<unsigned long>(d));
  mpz_class c = a * b;
  return static_cast<std::uint64_t>(c.get_ui());
}

}  // namespace

std::vector<Word> pbw_words(const Algebra& alg, int degree) {
  if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
  std::vector<Word> out;
  Word cur;
  enumerate_words(alg.gen_count(), degree, cur, out);
  return out;
}

RatMatrix TruncatedMap::dense() const {
  RatMatrix m(target_basis.size(), std::vector<RatScalar>(source_basis.size()));
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (const auto& [r, v] : columns[c]) m[r][c] = RatScalar(v);
  return m;
}

TruncatedMap build_theta_matrix(int m, int n, int d, const OracleCaps& caps) {
  check_caps(m, n, d, caps);
  TruncatedMap tm;
  tm.source = Algebra::quantum_matrix(m, n);
  tm.target = Algebra::tensor_affine(m, n);
  tm.degree = d;
  tm.source_basis = pbw_words(*tm.source, d);

  // Bidegree-(d,d) words: sorted y-part followed by sorted z-part.
  std::vector<Word> ys, zs;
  {
    Word cur;
    enumerate_words(m, d, cur, ys);
    cur.clear();
    enumerate_words(n, d, cur, zs);
  }
  std::map<Word, std::uint32_t> target_index;
  for (const Word& y : ys)
    for (const Word& z : zs) {
      Word w;
      w.reserve(2 * static_cast<std::size_t>(d));
      w.insert(w.end(), y.begin(), y.end());
      for (Gen g : z) w.push_back(static_cast<Gen>(m + g));
      target_index.emplace(w, static_cast<std::uint32_t>(tm.target_basis.size()));
      tm.target_basis.push_back(std::move(w));
    }

  tm.columns.reserve(tm.source_basis.size());
  for (const Word& w : tm.source_basis) {
    NCPoly img = theta(NCPoly::monomial(tm.source, w), tm.target);
    std::map<std::uint32_t, Laurent> col;
    for (const auto& [word, c] : img.sorted_terms()) {
      auto it = target_index.find(word);
      if (it == target_index.end()) throw std::logic_error("theta image left the bidegree component");
      col[it->second] = c;
    }
    tm.columns.push_back(std::move(col));
  }
  return tm;
}

KernelReport kernel_equals_i1(int m, int n, int d, const OracleCaps& caps) {
  TruncatedMap tm = build_theta_matrix(m, n, d, caps);
  KernelReport rep;
  rep.m = m;
  rep.n = n;
  rep.d = d;

  SparseEchelon image;
  for (const auto& col : tm.columns) image.insert(col);
  rep.theta_kernel_dim = static_cast<int>(tm.source_basis.size()) - image.rank();

  std::map<Word, std::uint32_t> source_index;
  for (std::size_t k = 0; k < tm.source_basis.size(); ++k)
    source_index.emplace(tm.source_basis[k], static_cast<std::uint32_t>(k));

  SparseEchelon span;
  rep.contained = true;
  if (d >= 2) {
    const std::vector<NCPoly> gens = i1_generators(tm.source);
    for (const NCPoly& g : gens) {
      for (int du = 0; du + 2 <= d; ++du) {
        const int dv = d - 2 - du;
        for (const Word& u : pbw_words(*tm.source, du)) {
          const NCPoly ug = multiply(NCPoly::monomial(tm.source, u), g);
          for (const Word& v : pbw_words(*tm.source, dv)) {
            const NCPoly sandwich = multiply(ug, NCPoly::monomial(tm.source, v));
            if (!theta(sandwich, tm.target).is_zero()) rep.contained = false;
            SparseEchelon::Vec vec;
            for (const auto& [id, c] : sandwich.terms())
              vec.emplace(source_index.at(tm.source->word(id)), c);
            span.insert(std::move(vec));
          }
        }
      }
    }
  }
  rep.i1_span_dim = span.rank();
  rep.equal = rep.contained && rep.i1_span_dim == rep.theta_kernel_dim;
  return rep;
}

SBasisReport verify_s_basis(int m, int n, int d, const OracleCaps& caps) {
  TruncatedMap tm = build_theta_matrix(m, n, d, caps);
  SBasisReport rep;
  rep.m = m;
  rep.n = n;
  rep.d = d;
  rep.expected_rank = s_count(m, n, d);

  SparseEchelon image;
  for (const auto& col : tm.columns) image.insert(col);
  rep.rank = image.rank();

  std::set<Word> images;
  const std::vector<Word> swords = s_basis(*tm.source, d);
  bool injective = true;
  for (const Word& s : swords) {
    NCPoly img = theta(NCPoly::monomial(tm.source, s), tm.target);
    if (img.term_count() != 1) throw std::logic_error("image of a monomial is not a monomial");
    const auto [word, c] = img.sorted_terms().front();
    if (!c.is_monomial()) injective = false;
    if (!images.insert(word).second) injective = false;
  }
  rep.injective_on_s_words = injective && images.size() == swords.size();
  rep.pass = rep.injective_on_s_words && rep.rank >= 0 &&
             static_cast<std::uint64_t>(rep.rank) == rep.expected_rank &&
             swords.size() == rep.expected_rank;
  return rep;
}

CoinvariantReport verify_coinvariants(int m, int n, int d, const OracleCaps& caps) {
  TruncatedMap tm = build_theta_matrix(m, n, d, caps);
  CoinvariantReport rep;
  rep.m = m;
  rep.n = n;
  rep.d = d;

  // Scan the whole total-degree-2d component of the tensor algebra.
  rep.off_diagonal_zero = true;
  std::uint64_t weight_zero = 0;
  for (const Word& w : pbw_words(*tm.target, 2 * d)) {
    const int weight = gamma_weight(*tm.target, w);
    int ydeg = 0;
    for (Gen g : w)
      if (g < m) ++ydeg;
    if (weight == 0) {
      ++weight_zero;
      if (ydeg != d) rep.off_diagonal_zero = false;
    } else if (ydeg == d) {
      rep.off_diagonal_zero = false;  // a bidegree-(d,d) word must have weight 0
    }
  }
  rep.coinvariant_dim = weight_zero;

  SparseEchelon image;
  for (const auto& col : tm.columns) image.insert(col);
  rep.image_dim = image.rank();

  rep.image_in_coinvariants = true;
  for (const auto& col : tm.columns)
    for (const auto& [r, c] : col) {
      (void)c;
      if (gamma_weight(*tm.target, tm.target_basis[r]) != 0) rep.image_in_coinvariants = false;
    }

  rep.pass = rep.image_in_coinvariants && rep.off_diagonal_zero && rep.image_dim >= 0 &&
             static_cast<std::uint64_t>(rep.image_dim) == rep.coinvariant_dim;
  return rep;
}

}  // namespace qmat
