#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "orbitslice/polynomial.hpp"

namespace orbitslice {

/// Dense row-major matrix with value-semantics storage.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), fill) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int r, int c) { return data_[index(r, c)]; }
  const T& operator()(int r, int c) const { return data_[index(r, c)]; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t index(int r, int c) const { return static_cast<std::size_t>(r * cols_ + c); }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using PolyMatrix = Matrix<Polynomial>;

RationalMatrix identity_matrix(int n);
RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

/// Rank by fraction-free (Bareiss) elimination.
int rank(const RationalMatrix& m);
Rational determinant(const RationalMatrix& m);
/// nullopt when singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& m);

/// Rows [row0, row0+rows) x cols [col0, col0+cols).
RationalMatrix submatrix(const RationalMatrix& m, int row0, int rows, int col0, int cols);
PolyMatrix submatrix(const PolyMatrix& m, int row0, int rows, int col0, int cols);

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
RationalMatrix evaluate(const PolyMatrix& m, std::span<const Rational> point);
bool is_identity(const PolyMatrix& m);

/// Determinants of square submatrices of one polynomial matrix by Laplace
/// expansion along the top selected row. Sub-minors are memoized by
/// (row set, column set), so computing every k-minor reuses all smaller ones.
/// At most 32 rows and 32 columns.
class MinorEngine {
 public:
  explicit MinorEngine(const PolyMatrix& m);

  Polynomial minor(std::uint32_t row_mask, std::uint32_t col_mask);

  /// Every size-k minor, rows and columns in lexicographic subset order.
  std::vector<Polynomial> all_minors(int k);

  std::size_t cache_size() const { return cache_.size(); }

 private:
  PolyMatrix m_;
  RingPtr ring_;
  std::vector<std::uint32_t> nonzero_cols_;  // per row
  std::unordered_map<std::uint64_t, Polynomial> cache_;
};

/// Lexicographically ordered k-subsets of {0..n-1} as bitmasks.
std::vector<std::uint32_t> subsets_of_size(int n, int k);

}  // namespace orbitslice
