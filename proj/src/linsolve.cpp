#include "qmat/linsolve.hpp"

#include <algorithm>
#include <stdexcept>

namespace qmat {

namespace {

using LRow = std::vector<Laurent>;

// Common rational content and q-power of a row divided out; sign fixed so the
// first nonzero entry has positive leading coefficient.
void strip_row(LRow& row) {
  Rational cont(0);
  int shift = 0;
  bool seen = false;
  bool flip = false;
  for (const auto& e : row) {
    if (e.is_zero()) continue;
    cont = rational_gcd(cont, e.content());
    if (!seen) {
      shift = e.min_degree();
      flip = e.terms().back().second < 0;
      seen = true;
    } else {
      shift = std::min(shift, e.min_degree());
    }
  }
  if (!seen) return;
  if (flip) cont = -cont;
  for (auto& e : row) {
    if (e.is_zero()) continue;
    e = e.divided_by_rational(cont).shifted(-shift);
  }
}

std::size_t support_size(const LRow& row) {
  std::size_t s = 0;
  for (const auto& e : row) s += e.terms().size();
  return s;
}

// Clear denominators rowwise (row scaling preserves rank and right kernel).
std::vector<LRow> cleared(const RatMatrix& m) {
  std::vector<LRow> rows;
  rows.reserve(m.size());
  for (const auto& r : m) {
    Laurent common(1);
    for (const auto& e : r) common = common * e.den();
    LRow out;
    out.reserve(r.size());
    for (const auto& e : r) out.push_back(e.num() * divide_exact(common, e.den()));
    strip_row(out);
    rows.push_back(std::move(out));
  }
  return rows;
}

// Row echelon by cross-multiplication; returns pivot columns in order.
std::vector<std::size_t> echelonize(std::vector<LRow>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t col = 0; col < cols && next < rows.size(); ++col) {
    std::size_t best = rows.size();
    for (std::size_t r = next; r < rows.size(); ++r) {
      if (rows[r][col].is_zero()) continue;
      if (best == rows.size() || support_size(rows[r]) < support_size(rows[best])) best = r;
    }
    if (best == rows.size()) continue;
    std::swap(rows[next], rows[best]);
    const Laurent piv = rows[next][col];
    for (std::size_t r = next + 1; r < rows.size(); ++r) {
      if (rows[r][col].is_zero()) continue;
      const Laurent f = rows[r][col];
      for (std::size_t c = 0; c < cols; ++c) rows[r][c] = piv * rows[r][c] - f * rows[next][c];
      strip_row(rows[r]);
    }
    pivots.push_back(col);
    ++next;
  }
  return pivots;
}

}  // namespace

int matrix_rank(const RatMatrix& m) {
  if (m.empty()) return 0;
  std::vector<LRow> rows = cleared(m);
  return static_cast<int>(echelonize(rows, m[0].size()).size());
}

std::vector<std::vector<Laurent>> kernel_basis(const RatMatrix& m) {
  std::vector<std::vector<Laurent>> basis;
  if (m.empty()) return basis;
  const std::size_t cols = m[0].size();
  std::vector<LRow> rows = cleared(m);
  std::vector<std::size_t> pivots = echelonize(rows, cols);

  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<RatScalar> x(cols);
    x[free] = RatScalar(1);
    // Back-substitute pivot variables from the bottom row up.
    for (std::size_t k = pivots.size(); k-- > 0;) {
      const LRow& row = rows[k];
      const std::size_t p = pivots[k];
      RatScalar acc;
      for (std::size_t c = p + 1; c < cols; ++c) {
        if (row[c].is_zero() || x[c].is_zero()) continue;
        acc += RatScalar(row[c]) * x[c];
      }
      x[p] = -acc / RatScalar(row[p]);
    }
    // Clear denominators and strip content.
    Laurent common(1);
    for (const auto& e : x) common = common * e.den();
    LRow v;
    v.reserve(cols);
    for (const auto& e : x) v.push_back(e.num() * divide_exact(common, e.den()));
    strip_row(v);
    basis.push_back(std::move(v));
  }
  return basis;
}

void SparseEchelon::strip_content(Vec& v) {
  if (v.empty()) return;
  Rational cont(0);
  int shift = 0;
  bool seen = false;
  for (const auto& [idx, e] : v) {
    (void)idx;
    cont = rational_gcd(cont, e.content());
    shift = seen ? std::min(shift, e.min_degree()) : e.min_degree();
    seen = true;
  }
  if (v.begin()->second.terms().back().second < 0) cont = -cont;
  for (auto& [idx, e] : v) {
    (void)idx;
    e = e.divided_by_rational(cont).shifted(-shift);
  }
}

SparseEchelon::Vec SparseEchelon::reduce(Vec v) const {
  while (!v.empty()) {
    const std::uint32_t p = v.begin()->first;
    auto it = rows_.find(p);
    if (it == rows_.end()) break;
    const Laurent vp = v.begin()->second;
    const Laurent ep = it->second.at(p);
    for (auto& [idx, e] : v) e = e * ep;
    for (const auto& [idx, e] : it->second) {
      auto [pos, fresh] = v.emplace(idx, Laurent());
      pos->second -= vp * e;
      if (pos->second.is_zero()) v.erase(pos);
      (void)fresh;
    }
    if (!v.empty()) strip_content(v);
  }
  return v;
}

bool SparseEchelon::insert(Vec v) {
  for (auto it = v.begin(); it != v.end();)
    it = it->second.is_zero() ? v.erase(it) : std::next(it);
  v = reduce(std::move(v));
  if (v.empty()) return false;
  strip_content(v);
  const std::uint32_t p = v.begin()->first;
  rows_.emplace(p, std::move(v));
  return true;
}

bool SparseEchelon::in_span(Vec v) const {
  for (auto it = v.begin(); it != v.end();)
    it = it->second.is_zero() ? v.erase(it) : std::next(it);
  return reduce(std::move(v)).empty();
}

}  // namespace qmat
