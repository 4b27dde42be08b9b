#include "preproj/matrix.hpp"

#include "preproj/error.hpp"

#include <string>
#include <utility>

namespace preproj {

namespace {

std::string shape(const RatMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols)
    fail(ErrorKind::invalid_input, "matrix entry count does not match its shape");
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  std::size_t c = rows.empty() ? 0 : rows.front().size();
  RatMatrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) fail(ErrorKind::invalid_input, "ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool RatMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

RatMatrix RatMatrix::column(std::size_t c) const {
  RatMatrix v(rows_, 1);
  for (std::size_t r = 0; r < rows_; ++r) v(r, 0) = (*this)(r, c);
  return v;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_)
    fail(ErrorKind::invalid_input, "cannot multiply " + shape(a) + " by " + shape(b));
  RatMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& y = b(k, j);
        if (!y.is_zero()) out(i, j) += x * y;
      }
    }
  return out;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    fail(ErrorKind::invalid_input, "cannot add " + shape(a) + " and " + shape(b));
  RatMatrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
  return out;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    fail(ErrorKind::invalid_input, "cannot subtract " + shape(b) + " from " + shape(a));
  RatMatrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= b.data_[k];
  return out;
}

RatMatrix operator*(const Rational& s, const RatMatrix& m) {
  RatMatrix out = m;
  for (auto& x : out.data_) x *= s;
  return out;
}

RatMatrix rref(RatMatrix m, std::vector<std::size_t>* pivots) {
  if (pivots) pivots->clear();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t p = lead;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != lead)
      for (std::size_t k = 0; k < cols; ++k) std::swap(m(p, k), m(lead, k));

    const Rational inv = Rational(1) / m(lead, c);
    if (inv != Rational(1))
      for (std::size_t k = c; k < cols; ++k)
        if (!m(lead, k).is_zero()) m(lead, k) *= inv;

    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || m(r, c).is_zero()) continue;
      const Rational f = m(r, c);
      for (std::size_t k = c; k < cols; ++k)
        if (!m(lead, k).is_zero()) m(r, k) -= f * m(lead, k);
    }
    if (pivots) pivots->push_back(c);
    ++lead;
  }
  return m;
}

std::size_t rank(const RatMatrix& m) {
  std::vector<std::size_t> pivots;
  rref(m, &pivots);
  return pivots.size();
}

RatMatrix kernel_basis(const RatMatrix& m) {
  std::vector<std::size_t> pivots;
  const RatMatrix r = rref(m, &pivots);
  const std::size_t cols = m.cols();

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;

  RatMatrix basis(cols, cols - pivots.size());
  std::size_t out = 0;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    basis(free, out) = 1;
    for (std::size_t row = 0; row < pivots.size(); ++row)
      basis(pivots[row], out) = -r(row, free);
    ++out;
  }
  return basis;
}

bool is_invertible(const RatMatrix& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

RatMatrix inverse(const RatMatrix& m) {
  if (m.rows() != m.cols())
    fail(ErrorKind::invalid_input, "cannot invert non-square " + shape(m));
  const std::size_t n = m.rows();
  std::vector<std::size_t> pivots;
  RatMatrix r = rref(hconcat(m, RatMatrix::identity(n)), &pivots);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1))
    fail(ErrorKind::invalid_input, "matrix is singular");
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
  return inv;
}

RatMatrix hconcat(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows())
    fail(ErrorKind::invalid_input, "cannot concatenate " + shape(a) + " and " + shape(b));
  RatMatrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

}  // namespace preproj
