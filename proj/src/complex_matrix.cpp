#include "hycomb/complex_matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace hycomb {

namespace {

void check_dims(int rows, int cols) {
  if (rows < 1 || cols < 1) {
    throw std::invalid_argument("ComplexMatrix: dimensions must be >= 1");
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  check_dims(rows, cols);
  data_.assign(static_cast<std::size_t>(rows) * cols, Complex(0.0, 0.0));
}

ComplexMatrix::ComplexMatrix(int rows, int cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  check_dims(rows, cols);
  if (data_.size() != static_cast<std::size_t>(rows) * cols) {
    throw std::invalid_argument("ComplexMatrix: entry count does not match dimensions");
  }
  for (const Complex& v : data_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw std::invalid_argument("ComplexMatrix: entries must be finite");
    }
  }
}

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Complex(1.0, 0.0);
  return m;
}

double ComplexMatrix::frobenius_norm() const {
  double acc = 0.0;
  for (const Complex& v : data_) acc += std::norm(v);
  return std::sqrt(acc);
}

double ComplexMatrix::max_column_norm() const {
  double best = 0.0;
  for (int c = 0; c < cols_; ++c) {
    double acc = 0.0;
    for (int r = 0; r < rows_; ++r) acc += std::norm((*this)(r, c));
    best = std::max(best, acc);
  }
  return std::sqrt(best);
}

ComplexMatrix ComplexMatrix::hermitian_times(const ComplexMatrix& other) const {
  if (rows_ != other.rows_) {
    throw std::invalid_argument("hermitian_times: row counts differ");
  }
  ComplexMatrix out(cols_, other.cols_);
  for (int i = 0; i < cols_; ++i) {
    for (int j = 0; j < other.cols_; ++j) {
      Complex acc(0.0, 0.0);
      for (int r = 0; r < rows_; ++r) acc += std::conj((*this)(r, i)) * other(r, j);
      out(i, j) = acc;
    }
  }
  return out;
}

ComplexMatrix ComplexMatrix::times(const ComplexMatrix& other) const {
  if (cols_ != other.rows_) {
    throw std::invalid_argument("times: inner dimensions differ");
  }
  ComplexMatrix out(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < other.cols_; ++j) {
      Complex acc(0.0, 0.0);
      for (int m = 0; m < cols_; ++m) acc += (*this)(i, m) * other(m, j);
      out(i, j) = acc;
    }
  }
  return out;
}

ComplexMatrix ComplexMatrix::hermitian() const {
  ComplexMatrix out(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("operator-: dimension mismatch");
  }
  ComplexMatrix out(a.rows(), a.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) - b(r, c);
  return out;
}

}  // namespace hycomb
