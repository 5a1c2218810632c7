#include "qmat/detid.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qmat {

namespace {

void check_quantum_matrix(const Algebra& a, const char* who) {
  if (a.shape() != Shape::QuantumMatrix)
    throw std::invalid_argument(std::string(who) + ": expected a quantum matrix algebra");
}

void validate_index_set(const std::vector<int>& v, int bound, const char* what) {
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] < 1 || v[k] > bound) throw std::invalid_argument(std::string(what) + " index out of range");
    if (k > 0 && v[k] <= v[k - 1])
      throw std::invalid_argument(std::string(what) + " indices must be strictly ascending");
  }
}

int inversions(const std::vector<int>& seq) {
  int inv = 0;
  for (std::size_t a = 0; a < seq.size(); ++a)
    for (std::size_t b = a + 1; b < seq.size(); ++b)
      if (seq[a] > seq[b]) ++inv;
  return inv;
}

// Non-decreasing sequences of the given length over values 1..max.
void multisets(int max, int length, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == length) {
    out.push_back(cur);
    return;
  }
  const int lo = cur.empty() ? 1 : cur.back();
  for (int v = lo; v <= max; ++v) {
    cur.push_back(v);
    multisets(max, length, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> multisets(int max, int length) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  multisets(max, length, cur, out);
  return out;
}

}  // namespace

NCPoly quantum_minor(const AlgebraPtr& qm, const MinorSpec& spec) {
  check_quantum_matrix(*qm, "quantum_minor");
  if (spec.rows.size() != spec.cols.size())
    throw std::invalid_argument("quantum_minor: row and column sets must have equal size");
  if (spec.rows.empty()) throw std::invalid_argument("quantum_minor: empty index sets");
  validate_index_set(spec.rows, qm->rows(), "row");
  validate_index_set(spec.cols, qm->cols(), "column");

  const int t = static_cast<int>(spec.rows.size());
  std::vector<int> perm(t);
  std::iota(perm.begin(), perm.end(), 0);
  NCPoly acc(qm);
  do {
    std::vector<int> colseq(t);
    for (int k = 0; k < t; ++k) colseq[k] = spec.cols[perm[k]];
    const int l = inversions(colseq);
    Word w(t);
    for (int k = 0; k < t; ++k)
      w[k] = qm->gen_ordinal(GeneratorId::matrix_entry(spec.rows[k], colseq[k]));
    acc.add_word(w, Laurent::q_power(l, (l % 2 == 0) ? Rational(1) : Rational(-1)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return normal_form(acc);
}

std::vector<NCPoly> i1_generators(const AlgebraPtr& qm) {
  check_quantum_matrix(*qm, "i1_generators");
  std::vector<NCPoly> gens;
  for (int i = 1; i <= qm->rows(); ++i)
    for (int l = i + 1; l <= qm->rows(); ++l)
      for (int j = 1; j <= qm->cols(); ++j)
        for (int s = j + 1; s <= qm->cols(); ++s) gens.push_back(quantum_minor(qm, {{i, l}, {j, s}}));
  return gens;
}

bool is_s_word(const Algebra& qm, const Word& w) {
  const int n = qm.cols();
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    const int i1 = w[k] / n, j1 = w[k] % n;
    const int i2 = w[k + 1] / n, j2 = w[k + 1] % n;
    if (i1 < i2 || j1 > j2) return false;
  }
  return true;
}

std::vector<Word> s_basis(const Algebra& qm, int degree) {
  if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
  const int n = qm.cols();
  std::vector<Word> out;
  for (const auto& rows : multisets(qm.rows(), degree)) {
    for (const auto& cols : multisets(qm.cols(), degree)) {
      Word w(degree);
      for (int k = 0; k < degree; ++k) {
        // rows are paired off in descending order against ascending columns
        const int r = rows[degree - 1 - k], c = cols[k];
        w[k] = static_cast<Gen>((r - 1) * n + (c - 1));
      }
      out.push_back(std::move(w));
    }
  }
  return out;
}

NCPoly reduce_mod_i1(const NCPoly& p) {
  check_quantum_matrix(*p.algebra(), "reduce_mod_i1");
  const int n = p.algebra()->cols();
  NCPoly out(p.algebra());
  for (const auto& [id, c] : p.terms()) {
    const Word& w = p.algebra()->word(id);
    std::vector<int> rows, cols;
    rows.reserve(w.size());
    cols.reserve(w.size());
    for (Gen g : w) {
      rows.push_back(g / n);
      cols.push_back(g % n);
    }
    // q-exponent: ascending row pairs minus descending column pairs.
    int delta = 0;
    for (std::size_t a = 0; a < w.size(); ++a)
      for (std::size_t b = a + 1; b < w.size(); ++b) {
        if (rows[a] < rows[b]) ++delta;
        if (cols[a] > cols[b]) --delta;
      }
    std::sort(rows.begin(), rows.end(), std::greater<int>());
    std::sort(cols.begin(), cols.end());
    Word sw(w.size());
    for (std::size_t k = 0; k < w.size(); ++k) sw[k] = static_cast<Gen>(rows[k] * n + cols[k]);
    out.add_word(sw, c * Laurent::q_power(delta));
  }
  return out;
}

NCPoly reduce_mod_i1_by_exchanges(const NCPoly& p) {
  check_quantum_matrix(*p.algebra(), "reduce_mod_i1_by_exchanges");
  const int n = p.algebra()->cols();
  NCPoly out(p.algebra());
  for (const auto& [id, c] : p.terms()) {
    Word w = p.algebra()->word(id);
    Laurent coeff = c;
    for (;;) {
      std::size_t r = w.size();
      for (std::size_t k = 0; k + 1 < w.size(); ++k) {
        const int i1 = w[k] / n, j1 = w[k] % n;
        const int i2 = w[k + 1] / n, j2 = w[k + 1] % n;
        if (i1 < i2 || j1 > j2) {
          r = k;
          break;
        }
      }
      if (r == w.size()) break;
      const int i1 = w[r] / n, j1 = w[r] % n;
      const int i2 = w[r + 1] / n, j2 = w[r + 1] % n;
      if (i1 < i2 && j1 >= j2) {
        // exact swap; scalar q when the columns coincide, 1 when they commute
        if (j1 == j2) coeff *= Laurent::q_power(1);
        std::swap(w[r], w[r + 1]);
      } else if (i1 == i2 && j1 > j2) {
        // same row, descending columns: exact swap with scalar q^{-1}
        coeff *= Laurent::q_power(-1);
        std::swap(w[r], w[r + 1]);
      } else if (i1 < i2 && j1 < j2) {
        // both increasing: congruent to q times the row-swapped word
        coeff *= Laurent::q_power(1);
        w[r] = static_cast<Gen>(i2 * n + j1);
        w[r + 1] = static_cast<Gen>(i1 * n + j2);
      } else {
        // both decreasing: congruent to q^{-1} times the column-swapped word
        coeff *= Laurent::q_power(-1);
        w[r] = static_cast<Gen>(i1 * n + j2);
        w[r + 1] = static_cast<Gen>(i2 * n + j1);
      }
    }
    out.add_word(w, coeff);
  }
  return out;
}

}  // namespace qmat
