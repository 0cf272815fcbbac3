#include "orbitslice/matrix.hpp"

#include <algorithm>
#include <bit>

#include "orbitslice/error.hpp"

namespace orbitslice {

RationalMatrix identity_matrix(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

namespace {

// In-place Bareiss elimination; returns the rank and the sign-corrected
// determinant of the leading square block when square and full rank.
int bareiss(RationalMatrix& a, Rational* det) {
  const int rows = a.rows(), cols = a.cols();
  Rational prev = 1;
  int sign = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i) {
      if (a(i, c) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) {
      for (int j = 0; j < cols; ++j) std::swap(a(r, j), a(pivot, j));
      sign = -sign;
    }
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) a(i, j) = (a(r, c) * a(i, j) - a(i, c) * a(r, j)) / prev;
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  if (det != nullptr) *det = (rows == cols && r == rows) ? Rational(sign * prev) : Rational(0);
  return r;
}

}  // namespace

int rank(const RationalMatrix& m) {
  RationalMatrix a = m;
  return bareiss(a, nullptr);
}

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::BadIndices, "determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  RationalMatrix a = m;
  Rational d;
  bareiss(a, &d);
  return d;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  const int n = m.rows();
  if (n != m.cols()) throw Error(ErrorCode::BadIndices, "inverse of a non-square matrix");
  RationalMatrix a = m;
  RationalMatrix inv = identity_matrix(n);
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int i = c; i < n; ++i) {
      if (a(i, c) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return std::nullopt;
    for (int j = 0; j < n; ++j) {
      std::swap(a(c, j), a(pivot, j));
      std::swap(inv(c, j), inv(pivot, j));
    }
    const Rational scale = 1 / a(c, c);
    for (int j = 0; j < n; ++j) {
      a(c, j) *= scale;
      inv(c, j) *= scale;
    }
    for (int i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (int j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

template <class T>
static Matrix<T> take(const Matrix<T>& m, int row0, int rows, int col0, int cols) {
  if (row0 < 0 || col0 < 0 || rows < 0 || cols < 0 || row0 + rows > m.rows() || col0 + cols > m.cols()) {
    throw Error(ErrorCode::BadIndices, "submatrix out of range");
  }
  Matrix<T> out(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) out(i, j) = m(row0 + i, col0 + j);
  }
  return out;
}

RationalMatrix submatrix(const RationalMatrix& m, int row0, int rows, int col0, int cols) {
  return take(m, row0, rows, col0, cols);
}

PolyMatrix submatrix(const PolyMatrix& m, int row0, int rows, int col0, int cols) {
  return take(m, row0, rows, col0, cols);
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows() || a.rows() == 0 || b.cols() == 0) {
    throw Error(ErrorCode::BadIndices, "incompatible matrix product");
  }
  const RingPtr& ring = a(0, 0).ring();
  PolyMatrix out(a.rows(), b.cols(), Polynomial(ring));
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) {
        if (b(k, j).is_zero()) continue;
        out(i, j) += a(i, k) * b(k, j);
      }
    }
  }
  return out;
}

RationalMatrix evaluate(const PolyMatrix& m, std::span<const Rational> point) {
  RationalMatrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).evaluate(point);
  }
  return out;
}

bool is_identity(const PolyMatrix& m) {
  if (m.rows() != m.cols()) return false;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      const Polynomial& e = m(i, j);
      if (i == j) {
        if (!e.is_constant() || e.constant_term() != 1) return false;
      } else if (!e.is_zero()) {
        return false;
      }
    }
  }
  return true;
}

MinorEngine::MinorEngine(const PolyMatrix& m) : m_(m) {
  if (m.rows() > 32 || m.cols() > 32) throw Error(ErrorCode::ResourceLimit, "minor engine limited to 32x32");
  if (m.rows() > 0 && m.cols() > 0) ring_ = m(0, 0).ring();
  nonzero_cols_.assign(static_cast<std::size_t>(m.rows()), 0);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero()) nonzero_cols_[static_cast<std::size_t>(i)] |= 1u << j;
    }
  }
}

Polynomial MinorEngine::minor(std::uint32_t row_mask, std::uint32_t col_mask) {
  if (row_mask == 0) return Polynomial::constant(ring_, 1);
  const std::uint64_t key = (std::uint64_t{row_mask} << 32) | col_mask;
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;

  const int top = std::countr_zero(row_mask);
  const std::uint32_t rest = row_mask & (row_mask - 1);
  Polynomial total(ring_);
  std::uint32_t candidates = col_mask & nonzero_cols_[static_cast<std::size_t>(top)];
  while (candidates != 0) {
    const int col = std::countr_zero(candidates);
    candidates &= candidates - 1;
    // Sign from the column's rank among the selected columns.
    const int position = std::popcount(col_mask & ((1u << col) - 1));
    Polynomial sub = minor(rest, col_mask & ~(1u << col));
    if (sub.is_zero()) continue;
    Polynomial term = m_(top, col) * sub;
    total = position % 2 == 0 ? total + term : total - term;
  }
  cache_.emplace(key, total);
  return total;
}

std::vector<std::uint32_t> subsets_of_size(int n, int k) {
  std::vector<std::uint32_t> out;
  if (k < 0 || k > n) return out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    std::uint32_t mask = 0;
    for (int v : idx) mask |= 1u << v;
    out.push_back(mask);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

std::vector<Polynomial> MinorEngine::all_minors(int k) {
  std::vector<Polynomial> out;
  const auto rows = subsets_of_size(m_.rows(), k);
  const auto cols = subsets_of_size(m_.cols(), k);
  out.reserve(rows.size() * cols.size());
  for (std::uint32_t r : rows) {
    for (std::uint32_t c : cols) out.push_back(minor(r, c));
  }
  return out;
}

}  // namespace orbitslice
