#pragma once
// Degree-truncated linear algebra over the q-rational scalars. Everything
// here goes through explicit monomial bases and elimination, independently of
// the reduction shortcuts in the rest of the library, so rank and kernel
// statements can be checked by brute force at desk scale.

#include "qmat/algebra.hpp"
#include "qmat/linsolve.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>

namespace qmat {

struct OracleCaps {
  int max_m = 3;
  int max_n = 3;
  int max_d = 4;
};

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// All non-decreasing words of the given length, ascending lexicographic.
std::vector<Word> pbw_words(const Algebra& alg, int degree);

struct TruncatedMap {
  AlgebraPtr source;  // quantum matrix algebra
  AlgebraPtr target;  // tensor of affine spaces
  int degree = 0;
  std::vector<Word> source_basis;  // degree-d PBW words of the source
  std::vector<Word> target_basis;  // bidegree-(d,d) PBW words of the target
  // column k = coordinates of the image of source_basis[k]
  std::vector<std::map<std::uint32_t, Laurent>> columns;

  // Dense matrix (rows = target basis, columns = source basis).
  RatMatrix dense() const;
};

// Matrix of the tensor-space homomorphism restricted to the degree-d
// component, columns computed through the maps module.
TruncatedMap build_theta_matrix(int m, int n, int d, const OracleCaps& caps = {});

struct KernelReport {
  int m = 0, n = 0, d = 0;
  int theta_kernel_dim = 0;
  int i1_span_dim = 0;
  bool contained = false;  // every sandwich of a minor generator maps to zero
  bool equal = false;
};

// Kernel of the degree-d map versus the degree-d component of the 2x2-minor
// ideal, the latter spanned by normal forms of u * minor * v.
KernelReport kernel_equals_i1(int m, int n, int d, const OracleCaps& caps = {});

struct SBasisReport {
  int m = 0, n = 0, d = 0;
  std::uint64_t expected_rank = 0;  // C(m+d-1,d) * C(n+d-1,d)
  int rank = 0;
  bool injective_on_s_words = false;
  bool pass = false;
};

SBasisReport verify_s_basis(int m, int n, int d, const OracleCaps& caps = {});

struct CoinvariantReport {
  int m = 0, n = 0, d = 0;
  std::uint64_t coinvariant_dim = 0;  // weight-zero words in total degree 2d
  int image_dim = 0;                  // rank of the degree-d map
  bool off_diagonal_zero = false;     // no weight-zero word outside bidegree (d,d)
  bool image_in_coinvariants = false;
  bool pass = false;
};

CoinvariantReport verify_coinvariants(int m, int n, int d, const OracleCaps& caps = {});

}  // namespace qmat
