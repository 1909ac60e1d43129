#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "foxabf/bigint.hpp"
#include "foxabf/error.hpp"
#include "foxabf/laurent_poly.hpp"

namespace foxabf {

/// Dense row-major matrix over an exact ring (BigInt or LaurentPoly).
///
/// Dimensions are fixed at construction. A 0x0 matrix is allowed; it is the
/// presentation of the trivial group and has determinant 1.
template <class R>
class Matrix {
 public:
  using value_type = R;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, R(0)) {}
  Matrix(std::initializer_list<std::initializer_list<R>> init) : rows_(init.size()) {
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw DomainError("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = R(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  R& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const R& factor) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
  }
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const R& factor) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
  }
  void scale_row(std::size_t r, const R& factor) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = (*this)(r, j) * factor;
  }
  void scale_col(std::size_t c, const R& factor) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = (*this)(i, c) * factor;
  }

  /// Copy with row `r` and column `c` removed.
  Matrix without(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw DomainError("minor index out of range");
    Matrix out(rows_ - 1, cols_ - 1);
    for (std::size_t i = 0, oi = 0; i < rows_; ++i) {
      if (i == r) continue;
      for (std::size_t j = 0, oj = 0; j < cols_; ++j) {
        if (j == c) continue;
        out(oi, oj++) = (*this)(i, j);
      }
      ++oi;
    }
    return out;
  }

  /// Submatrix on the given row and column index lists.
  Matrix select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
    Matrix out(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(rows[i], cols[j]);
    return out;
  }

  template <class F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const R&>()))> {
    Matrix<decltype(f(std::declval<const R&>()))> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix dimension mismatch in product");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const R& aik = a(i, k);
        if (aik == R(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix dimension mismatch in difference");
    Matrix out = a;
    for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= b.data_[k];
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<R> data_;
};

using IntMatrix = Matrix<BigInt>;
using PolyMatrix = Matrix<LaurentPoly>;

/// Division-free determinant by Laplace expansion over column subsets,
/// O(n 2^n) ring multiplications. Works over any commutative ring.
template <class R>
R determinant_by_expansion(const Matrix<R>& a) {
  if (!a.is_square()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return R(1);
  if (n > 24) throw DomainError("matrix too large for expansion determinant");
  // partial[mask]: signed sum over assignments of the first popcount(mask)
  // rows to the columns in mask.
  std::vector<R> partial(std::size_t{1} << n, R(0));
  partial[0] = R(1);
  for (std::size_t mask = 0; mask + 1 < partial.size(); ++mask) {
    if (partial[mask] == R(0)) continue;
    const auto row = static_cast<std::size_t>(__builtin_popcountll(mask));
    for (std::size_t col = 0; col < n; ++col) {
      if (mask & (std::size_t{1} << col)) continue;
      if (a(row, col) == R(0)) continue;
      const int above = __builtin_popcountll(mask >> (col + 1));
      R term = partial[mask] * a(row, col);
      if (above % 2 == 0) {
        partial[mask | (std::size_t{1} << col)] += term;
      } else {
        partial[mask | (std::size_t{1} << col)] -= term;
      }
    }
  }
  return partial.back();
}

/// Over Z: fraction-free (Bareiss) elimination. Over Z[t^+-1]: expansion,
/// so no polynomial division is needed.
BigInt determinant(const IntMatrix& a);
LaurentPoly determinant(const PolyMatrix& a);

IntMatrix eval_at_minus_one(const PolyMatrix& a);

template <class R>
std::string to_string(const Matrix<R>& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i == 0 ? "[" : ", [";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ", ";
      if constexpr (std::is_same_v<R, LaurentPoly>) {
        out += m(i, j).to_string();
      } else {
        out += foxabf::to_string(m(i, j));
      }
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace foxabf
