#pragma once

#include <stdexcept>

#include "hycomb/complex_matrix.hpp"

namespace hycomb {

/// Numerical failure on a degenerate input (rank-deficient factorization,
/// non-positive-definite system). Monte-Carlo callers treat this as a bad
/// channel draw and redraw.
class NumericsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct QrResult {
  ComplexMatrix q;  // N x K, orthonormal columns
  ComplexMatrix r;  // K x K, upper triangular with real positive diagonal
};

/// Thin QR factorization of an N x K matrix (N >= K) via Householder
/// reflections. The diagonal of R is normalized to be real and strictly
/// positive, which makes Q a deterministic function of the input.
/// Throws NumericsError when a diagonal of R falls below
/// 1e-12 * (largest column norm), i.e. the columns are numerically dependent.
QrResult qr_thin(const ComplexMatrix& m);

/// Solves A X = B for Hermitian positive definite A (K x K) and B (K x M)
/// via Cholesky factorization. Throws std::invalid_argument if A is not
/// Hermitian to within 1e-12 relative asymmetry, and NumericsError on a
/// non-positive pivot.
ComplexMatrix solve_hpd(const ComplexMatrix& a, const ComplexMatrix& b);

namespace detail {

/// In-place lower Cholesky factor of the k x k Hermitian matrix stored
/// row-major in `a`. Returns false on a non-positive or non-finite pivot.
bool cholesky_in_place(Complex* a, int k);

/// Solves L L^H X = B given the factor from cholesky_in_place. B is k x m
/// row-major and is overwritten with the solution.
void cholesky_solve_in_place(const Complex* l, int k, Complex* b, int m);

}  // namespace detail

}  // namespace hycomb
