#pragma once
// Quantum determinants and minors, the ideal generated by the 2×2 quantum
// minors, and reduction of quantum-matrix elements onto the basis of words
// with non-increasing row indices and non-decreasing column indices.

#include "qmat/algebra.hpp"

namespace qmat {

struct MinorSpec {
  std::vector<int> rows;  // ascending, distinct
  std::vector<int> cols;  // ascending, distinct, same size as rows
};

// D(I,J) = sum over bijections sigma: rows -> cols of
// (-q)^{l(sigma)} X[r_1, sigma(r_1)] ... X[r_t, sigma(r_t)], rows ascending,
// l(sigma) the inversion count of the column sequence.
NCPoly quantum_minor(const AlgebraPtr& qm, const MinorSpec& spec);

// All 2x2 quantum minors X[i,j]X[l,s] - q X[i,s]X[l,j] for i<l, j<s.
std::vector<NCPoly> i1_generators(const AlgebraPtr& qm);

// Words with non-increasing rows and non-decreasing columns.
bool is_s_word(const Algebra& qm, const Word& w);
std::vector<Word> s_basis(const Algebra& qm, int degree);

// Unique representative of p modulo the 2x2-minor ideal, supported on
// s-basis words. Computed by pulling the element through the tensor-space
// picture: sort row indices descending and column indices ascending while
// collecting the q-powers the affine commutation relations emit. Works on
// arbitrary (not necessarily canonical) supports.
NCPoly reduce_mod_i1(const NCPoly& p);

// The same reduction computed by successive adjacent exchanges, one case per
// violation pattern; retained as an independent cross-check of the primary
// route.
NCPoly reduce_mod_i1_by_exchanges(const NCPoly& p);

}  // namespace qmat
