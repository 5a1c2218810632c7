#include "qmat/maps.hpp"

#include <algorithm>
#include <stdexcept>

namespace qmat {

namespace {

void check_tensor(const Algebra& a, const char* who) {
  if (a.shape() != Shape::TensorAffine)
    throw std::invalid_argument(std::string(who) + ": expected a tensor of affine spaces");
}

}  // namespace

AlgebraPtr tensor_target(const Algebra& qm) {
  if (qm.shape() != Shape::QuantumMatrix)
    throw std::invalid_argument("tensor_target: expected a quantum matrix algebra");
  return Algebra::tensor_affine(qm.rows(), qm.cols());
}

NCPoly theta(const NCPoly& p, const AlgebraPtr& tensor) {
  const Algebra& A = *p.algebra();
  if (A.shape() != Shape::QuantumMatrix)
    throw std::invalid_argument("theta: expected a quantum matrix element");
  check_tensor(*tensor, "theta");
  const int m = A.rows(), n = A.cols();
  if (tensor->tensor_split() != m || tensor->gen_count() != m + n)
    throw std::invalid_argument("theta: tensor target has mismatched dimensions");

  NCPoly raw(tensor);
  for (const auto& [id, c] : p.terms()) {
    const Word& w = A.word(id);
    // y_{i_1}..y_{i_l} z_{j_1}..z_{j_l}; the y and z sides commute, so this
    // is already the product of the per-generator images.
    Word t;
    t.reserve(2 * w.size());
    for (Gen g : w) t.push_back(static_cast<Gen>(g / n));
    for (Gen g : w) t.push_back(static_cast<Gen>(m + g % n));
    raw.add_word(t, c);
  }
  return normal_form(raw);
}

NCPoly theta(const NCPoly& p) { return theta(p, tensor_target(*p.algebra())); }

int gamma_weight(const Algebra& tensor, const Word& w) {
  check_tensor(tensor, "gamma_weight");
  const int split = tensor.tensor_split();
  int weight = 0;
  for (Gen g : w) weight += (g < split) ? -1 : 1;
  return weight;
}

CoinvariantCheck coinvariant_check(const NCPoly& p) {
  check_tensor(*p.algebra(), "coinvariant_check");
  const NCPoly canon = p.is_canonical() ? p : normal_form(p);
  CoinvariantCheck result;
  result.coinvariant = true;
  auto terms = canon.sorted_terms();
  std::reverse(terms.begin(), terms.end());  // report the first offender in reading order
  for (const auto& [w, c] : terms) {
    (void)c;
    if (gamma_weight(*canon.algebra(), w) != 0) {
      result.coinvariant = false;
      result.witness = w;
      return result;
    }
  }
  return result;
}

NCPoly coinvariant_preimage(const NCPoly& p, const AlgebraPtr& qm) {
  const Algebra& T = *p.algebra();
  check_tensor(T, "coinvariant_preimage");
  if (qm->shape() != Shape::QuantumMatrix)
    throw std::invalid_argument("coinvariant_preimage: expected a quantum matrix target");
  const int m = T.tensor_split(), n = T.gen_count() - m;
  if (qm->rows() != m || qm->cols() != n)
    throw std::invalid_argument("coinvariant_preimage: target dimensions mismatch");

  const NCPoly canon = p.is_canonical() ? p : normal_form(p);
  NCPoly out(qm);
  for (const auto& [id, c] : canon.terms()) {
    const Word& w = T.word(id);
    std::vector<int> ys, zs;  // both ascending in a canonical word
    for (Gen g : w)
      (g < m ? ys : zs).push_back(g < m ? g : g - m);
    if (ys.size() != zs.size())
      throw std::invalid_argument("coinvariant_preimage: input is not a coinvariant (word of weight " +
                                  std::to_string(static_cast<int>(zs.size()) -
                                                 static_cast<int>(ys.size())) +
                                  ")");
    // Rewriting the ascending y-part as a descending word collects one q per
    // strictly ascending pair.
    int strict = 0;
    for (std::size_t a = 0; a < ys.size(); ++a)
      for (std::size_t b = a + 1; b < ys.size(); ++b)
        if (ys[a] < ys[b]) ++strict;
    Word x(ys.size());
    for (std::size_t k = 0; k < ys.size(); ++k)
      x[k] = static_cast<Gen>(ys[ys.size() - 1 - k] * n + zs[k]);
    out.add_word(x, c * Laurent::q_power(strict));
  }
  return out;
}

TorusWeight h_weight(const Algebra& qm, const Word& w) {
  if (qm.shape() != Shape::QuantumMatrix)
    throw std::invalid_argument("h_weight: expected a quantum matrix word");
  TorusWeight tw;
  tw.rows.assign(qm.rows(), 0);
  tw.cols.assign(qm.cols(), 0);
  const int n = qm.cols();
  for (Gen g : w) {
    ++tw.rows[g / n];
    ++tw.cols[g % n];
  }
  return tw;
}

}  // namespace qmat
