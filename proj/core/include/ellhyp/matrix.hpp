#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "ellhyp/error.hpp"
#include "ellhyp/numeric.hpp"

namespace ellhyp {

/// Small dense row-major complex matrix.
template <std::floating_point R>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols)) {
    if (rows < 0 || cols < 0) throw Error(ErrorKind::InvalidArgument, "matrix dimensions must be nonnegative");
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Complex<R>(1);
    return m;
  }

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  Complex<R>& operator()(int i, int j) { return data_[index(i, j)]; }
  const Complex<R>& operator()(int i, int j) const { return data_[index(i, j)]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::InvalidArgument, "matrix product dimension mismatch");
    Matrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int j = 0; j < b.cols_; ++j) {
        SumAccumulator<R> acc;
        for (int k = 0; k < a.cols_; ++k) acc.add(a(i, k) * b(k, j));
        out(i, j) = acc.value();
      }
    return out;
  }

  R row_max_abs(int i) const {
    R best(0);
    for (int j = 0; j < cols_; ++j) best = std::max(best, std::abs((*this)(i, j)));
    return best;
  }

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i * cols_ + j); }

  int rows_ = 0, cols_ = 0;
  std::vector<Complex<R>> data_;
};

template <std::floating_point R>
struct Determinant {
  Complex<R> value;
  /// max|u_ii| / min|u_ii| of the row-equilibrated LU factor; a cheap
  /// stand-in for the condition number.
  R condition{1};
};

/// Determinant by LU with partial pivoting. Rows and then columns are
/// equilibrated first so that the condition estimate does not see plain
/// diagonal scaling.
template <std::floating_point R>
Determinant<R> det_numeric(Matrix<R> m) {
  const int n = m.rows();
  if (n != m.cols()) throw Error(ErrorKind::InvalidArgument, "determinant of a non-square matrix");
  if (n > 12) throw Error(ErrorKind::InvalidArgument, "det_numeric supports n <= 12");
  if (n == 0) return {Complex<R>(1), R(1)};

  Complex<R> scale(1);
  for (int i = 0; i < n; ++i) {
    const R row = m.row_max_abs(i);
    if (row == R(0) || !std::isfinite(row))
      throw Error(ErrorKind::SingularToWorkingPrecision, "row " + std::to_string(i) + " is zero or not finite");
    scale *= row;
    for (int j = 0; j < n; ++j) m(i, j) /= row;
  }
  for (int j = 0; j < n; ++j) {
    R col(0);
    for (int i = 0; i < n; ++i) col = std::max(col, std::abs(m(i, j)));
    if (col == R(0))
      throw Error(ErrorKind::SingularToWorkingPrecision, "column " + std::to_string(j) + " is zero");
    scale *= col;
    for (int i = 0; i < n; ++i) m(i, j) /= col;
  }

  Complex<R> det(1);
  R big(0), small = std::numeric_limits<R>::infinity();
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int i = col + 1; i < n; ++i)
      if (std::abs(m(i, col)) > std::abs(m(pivot, col))) pivot = i;
    const R mag = std::abs(m(pivot, col));
    if (mag <= std::numeric_limits<R>::epsilon() * R(n))
      throw Error(ErrorKind::SingularToWorkingPrecision, "pivot " + std::to_string(col) + " vanishes");
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    big = std::max(big, mag);
    small = std::min(small, mag);
    for (int i = col + 1; i < n; ++i) {
      const Complex<R> factor = m(i, col) / m(col, col);
      for (int j = col + 1; j < n; ++j) m(i, j) -= factor * m(col, j);
    }
  }
  return {det * scale, big / small};
}

}  // namespace ellhyp
