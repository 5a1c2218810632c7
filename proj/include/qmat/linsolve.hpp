#pragma once
// Exact linear algebra over the q-rational scalars: rank and right-kernel
// bases via fraction-free row elimination (cross-multiplication with content
// stripping), plus an incremental sparse echelon form used for the truncated
// span computations in the oracle.

#include "qmat/ratscalar.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace qmat {

using RatMatrix = std::vector<std::vector<RatScalar>>;  // rows of equal length

int matrix_rank(const RatMatrix& m);

// Basis of the right kernel {v : M v = 0}. Vectors are cleared to Laurent
// entries with content removed; the first nonzero entry has a positive
// leading coefficient.
std::vector<std::vector<Laurent>> kernel_basis(const RatMatrix& m);

class SparseEchelon {
 public:
  using Vec = std::map<std::uint32_t, Laurent>;  // index -> nonzero entry

  // Returns true iff v was independent of the current span (and was added).
  bool insert(Vec v);
  bool in_span(Vec v) const;
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::map<std::uint32_t, Vec>& rows() const { return rows_; }

 private:
  // Reduce v against stored rows; empty result means dependent.
  Vec reduce(Vec v) const;
  static void strip_content(Vec& v);
  std::map<std::uint32_t, Vec> rows_;  // pivot index -> row
};

}  // namespace qmat
