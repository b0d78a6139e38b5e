#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace hycomb {

using Complex = std::complex<double>;

/// Dense complex matrix with row-major storage. Sized for the small dense
/// problems in this project (arrays up to a few hundred antennas, a few
/// dozen users); not a general linear-algebra type.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  /// Zero-initialized rows x cols matrix. Both dimensions must be >= 1.
  ComplexMatrix(int rows, int cols);
  /// Takes ownership of `entries` (row-major, rows*cols values). All entries
  /// must be finite.
  ComplexMatrix(int rows, int cols, std::vector<Complex> entries);

  static ComplexMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Complex& operator()(int r, int c) { return data_[index(r, c)]; }
  const Complex& operator()(int r, int c) const { return data_[index(r, c)]; }

  Complex* data() { return data_.data(); }
  const Complex* data() const { return data_.data(); }

  double frobenius_norm() const;
  double max_column_norm() const;

  /// this^H * other
  ComplexMatrix hermitian_times(const ComplexMatrix& other) const;
  /// this * other
  ComplexMatrix times(const ComplexMatrix& other) const;
  /// Conjugate transpose.
  ComplexMatrix hermitian() const;

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace hycomb
