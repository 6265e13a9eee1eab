#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "nilcortex/rational.hpp"

namespace nilcortex {

/// Dense row-major rational matrix.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Throws DimensionError unless every row has the same length.
  static RatMatrix from_rows(const std::vector<RatVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Rational> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  RatMatrix transpose() const;
  RatVector apply(std::span<const Rational> v) const;

  bool operator==(const RatMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RankKernel {
  std::size_t rank = 0;
  std::vector<RatVector> kernel;
};

/// Exact rank and a kernel basis by Gauss-Jordan elimination. The reduced
/// row echelon form is unique, so the kernel basis (one vector per free
/// column, with a 1 in that column) is canonical.
RankKernel rank_and_kernel(const RatMatrix& m);

inline std::size_t rank(const RatMatrix& m) { return rank_and_kernel(m).rank; }

/// r_j = rank of the first j rows, j = 1..rows.
std::vector<std::size_t> incremental_row_ranks(const RatMatrix& m);

/// Incrementally maintained echelon basis of a row space. insert() reports
/// whether the vector enlarged the span.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t cols) : cols_(cols) {}

  bool insert(std::span<const Rational> v);
  /// True iff v lies in the current span.
  bool contains(std::span<const Rational> v) const;
  std::size_t rank() const { return rows_.size(); }

 private:
  RatVector reduce(std::span<const Rational> v) const;

  std::size_t cols_;
  std::vector<RatVector> rows_;   // pivot entry normalized to 1
  std::vector<std::size_t> pivots_;
};

}  // namespace nilcortex
