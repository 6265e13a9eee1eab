#include "nilcortex/matrix.hpp"

#include <string>
#include <utility>

namespace nilcortex {

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RatMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw DimensionError("ragged matrix: row " + std::to_string(i) + " has length " +
                           std::to_string(rows[i].size()) + ", expected " + std::to_string(cols));
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatVector RatMatrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw DimensionError("matrix-vector length mismatch");
  RatVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = dot(row(i), v);
  return out;
}

RankKernel rank_and_kernel(const RatMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  RatMatrix a = m;
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;

  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));

    const Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a(i, c)) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (sgn(a(r, j)) != 0) a(i, j) -= f * a(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }

  RankKernel out;
  out.rank = r;
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatVector v(cols);
    v[free] = 1;
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -a(k, free);
    out.kernel.push_back(std::move(v));
  }
  return out;
}

std::vector<std::size_t> incremental_row_ranks(const RatMatrix& m) {
  RowEchelon echelon(m.cols());
  std::vector<std::size_t> ranks;
  ranks.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    echelon.insert(m.row(i));
    ranks.push_back(echelon.rank());
  }
  return ranks;
}

RatVector RowEchelon::reduce(std::span<const Rational> v) const {
  if (v.size() != cols_) throw DimensionError("row length mismatch");
  RatVector w(v.begin(), v.end());
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational f = w[pivots_[k]];
    if (sgn(f) == 0) continue;
    for (std::size_t j = 0; j < cols_; ++j)
      if (sgn(rows_[k][j]) != 0) w[j] -= f * rows_[k][j];
  }
  return w;
}

bool RowEchelon::insert(std::span<const Rational> v) {
  RatVector w = reduce(v);
  std::size_t p = 0;
  while (p < cols_ && sgn(w[p]) == 0) ++p;
  if (p == cols_) return false;
  const Rational inv = 1 / w[p];
  for (auto& x : w) x *= inv;
  // keep existing rows reduced against the new pivot so reduce() stays a
  // single pass
  for (auto& row : rows_) {
    const Rational f = row[p];
    if (sgn(f) == 0) continue;
    for (std::size_t j = 0; j < cols_; ++j)
      if (sgn(w[j]) != 0) row[j] -= f * w[j];
  }
  rows_.push_back(std::move(w));
  pivots_.push_back(p);
  return true;
}

bool RowEchelon::contains(std::span<const Rational> v) const { return is_zero(reduce(v)); }

}  // namespace nilcortex
