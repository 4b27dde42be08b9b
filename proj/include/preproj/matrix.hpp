#pragma once

#include "preproj/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace preproj {

/// Dense row-major matrix over the rationals. Matrices act on column
/// vectors, so the composite g∘f is `g * f`. Zero-row and zero-column
/// shapes are legal and stand for maps to or from the zero space.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  /// Convenience for tests and literals: `RatMatrix::from_rows({{1, 2}, {3, 4}})`.
  static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static RatMatrix identity(std::size_t n);
  static RatMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::span<const Rational> entries() const { return data_; }

  bool is_zero() const;
  RatMatrix column(std::size_t c) const;
  RatMatrix transpose() const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const Rational& s, const RatMatrix& m);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form, pivoting on the first nonzero entry of each
/// column in order. `pivots` receives the pivot column of each nonzero row.
RatMatrix rref(RatMatrix m, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(const RatMatrix& m);

/// Columns form a basis of the null space; there are cols - rank of them.
RatMatrix kernel_basis(const RatMatrix& m);

/// True iff square of full rank. The 0x0 matrix is invertible.
bool is_invertible(const RatMatrix& m);

/// Exact inverse; throws invalid-input when `m` is singular or not square.
RatMatrix inverse(const RatMatrix& m);

/// Horizontal concatenation [a | b]; row counts must agree.
RatMatrix hconcat(const RatMatrix& a, const RatMatrix& b);

}  // namespace preproj
