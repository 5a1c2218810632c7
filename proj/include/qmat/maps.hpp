#pragma once
// The homomorphism X[i,j] -> y_i ⊗ z_j into the tensor product of two
// quantum affine spaces, the integer grading carried by the t=1 coaction,
// coinvariant testing with preimages, and torus weights.

#include "qmat/algebra.hpp"

#include <optional>

namespace qmat {

struct TorusWeight {
  std::vector<int> rows;  // multiplicity of each row index
  std::vector<int> cols;  // multiplicity of each column index
  bool operator==(const TorusWeight& o) const { return rows == o.rows && cols == o.cols; }
};

// Tensor target O_q(k^m) ⊗ O_q(k^n) matching a quantum matrix algebra.
AlgebraPtr tensor_target(const Algebra& qm);

// Image of p under the algebra homomorphism X[i,j] -> y_i ⊗ z_j, canonical
// in the tensor algebra.
NCPoly theta(const NCPoly& p, const AlgebraPtr& tensor);
NCPoly theta(const NCPoly& p);

// Coaction weight of a pure tensor word: (z-degree) - (y-degree).
int gamma_weight(const Algebra& tensor, const Word& w);

struct CoinvariantCheck {
  bool coinvariant = false;
  std::optional<Word> witness;  // first offending word in serialization order
};
CoinvariantCheck coinvariant_check(const NCPoly& p);

// For a coinvariant p, an element x of the quantum matrix algebra with
// theta(x) = p, supported on words with non-increasing rows and
// non-decreasing columns. Rejects non-coinvariants.
NCPoly coinvariant_preimage(const NCPoly& p, const AlgebraPtr& qm);

TorusWeight h_weight(const Algebra& qm, const Word& w);

}  // namespace qmat
