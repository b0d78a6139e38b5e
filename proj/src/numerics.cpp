#include "hycomb/numerics.hpp"

#include <cmath>
#include <vector>

namespace hycomb {

namespace detail {

bool cholesky_in_place(Complex* a, int k) {
  for (int j = 0; j < k; ++j) {
    double d = a[j * k + j].real();
    for (int m = 0; m < j; ++m) d -= std::norm(a[j * k + m]);
    if (!(d > 0.0) || !std::isfinite(d)) return false;
    const double ljj = std::sqrt(d);
    a[j * k + j] = Complex(ljj, 0.0);
    for (int i = j + 1; i < k; ++i) {
      Complex acc = a[i * k + j];
      for (int m = 0; m < j; ++m) acc -= a[i * k + m] * std::conj(a[j * k + m]);
      a[i * k + j] = acc / ljj;
    }
  }
  return true;
}

void cholesky_solve_in_place(const Complex* l, int k, Complex* b, int m) {
  // Forward: L Y = B.
  for (int i = 0; i < k; ++i) {
    for (int c = 0; c < m; ++c) {
      Complex acc = b[i * m + c];
      for (int j = 0; j < i; ++j) acc -= l[i * k + j] * b[j * m + c];
      b[i * m + c] = acc / l[i * k + i].real();
    }
  }
  // Backward: L^H X = Y.
  for (int i = k - 1; i >= 0; --i) {
    for (int c = 0; c < m; ++c) {
      Complex acc = b[i * m + c];
      for (int j = i + 1; j < k; ++j) acc -= std::conj(l[j * k + i]) * b[j * m + c];
      b[i * m + c] = acc / l[i * k + i].real();
    }
  }
}

}  // namespace detail

QrResult qr_thin(const ComplexMatrix& m) {
  const int n = m.rows();
  const int k = m.cols();
  if (n < k) throw std::invalid_argument("qr_thin: requires rows >= cols");

  const double max_col_norm = m.max_column_norm();

  ComplexMatrix work = m;
  // Householder vectors, one per column; v[j] has length n - j.
  std::vector<std::vector<Complex>> reflectors(k);
  std::vector<double> vsq(k, 0.0);

  for (int j = 0; j < k; ++j) {
    double xnorm_sq = 0.0;
    for (int i = j; i < n; ++i) xnorm_sq += std::norm(work(i, j));
    const double xnorm = std::sqrt(xnorm_sq);

    const Complex alpha = work(j, j);
    const double aabs = std::abs(alpha);
    // beta = sign(alpha) * ||x||, with sign(0) = 1; v = x + beta e1 maps x
    // onto -beta e1 and avoids cancellation.
    const Complex beta = (aabs == 0.0) ? Complex(xnorm, 0.0) : alpha / aabs * xnorm;

    std::vector<Complex>& v = reflectors[j];
    v.resize(n - j);
    v[0] = alpha + beta;
    for (int i = j + 1; i < n; ++i) v[i - j] = work(i, j);
    double vs = 0.0;
    for (const Complex& c : v) vs += std::norm(c);
    vsq[j] = vs;

    if (vs > 0.0) {
      for (int c = j; c < k; ++c) {
        Complex dot(0.0, 0.0);
        for (int i = j; i < n; ++i) dot += std::conj(v[i - j]) * work(i, c);
        const Complex f = 2.0 * dot / vs;
        for (int i = j; i < n; ++i) work(i, c) -= f * v[i - j];
      }
    }
  }

  ComplexMatrix r(k, k);
  for (int i = 0; i < k; ++i)
    for (int c = i; c < k; ++c) r(i, c) = work(i, c);

  // Q = H_0 H_1 ... H_{k-1} applied to the first k columns of the identity.
  ComplexMatrix q(n, k);
  for (int j = 0; j < k; ++j) q(j, j) = Complex(1.0, 0.0);
  for (int j = k - 1; j >= 0; --j) {
    if (vsq[j] <= 0.0) continue;
    const std::vector<Complex>& v = reflectors[j];
    for (int c = 0; c < k; ++c) {
      Complex dot(0.0, 0.0);
      for (int i = j; i < n; ++i) dot += std::conj(v[i - j]) * q(i, c);
      const Complex f = 2.0 * dot / vsq[j];
      for (int i = j; i < n; ++i) q(i, c) -= f * v[i - j];
    }
  }

  // Normalize the diagonal of R to be real positive (absorbing the phase
  // into Q), and reject numerically rank-deficient inputs.
  for (int j = 0; j < k; ++j) {
    const Complex d = r(j, j);
    const double dabs = std::abs(d);
    if (dabs < 1e-12 * max_col_norm || dabs == 0.0) {
      throw NumericsError("qr_thin: rank-deficient matrix (degenerate channel draw)");
    }
    const Complex phase = d / dabs;
    const Complex phase_conj = std::conj(phase);
    for (int c = j + 1; c < k; ++c) r(j, c) *= phase_conj;
    r(j, j) = Complex(dabs, 0.0);
    for (int i = 0; i < n; ++i) q(i, j) *= phase;
  }

  return {std::move(q), std::move(r)};
}

ComplexMatrix solve_hpd(const ComplexMatrix& a, const ComplexMatrix& b) {
  const int k = a.rows();
  if (a.cols() != k) throw std::invalid_argument("solve_hpd: A must be square");
  if (b.rows() != k) throw std::invalid_argument("solve_hpd: B row count must match A");

  double scale = 0.0;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) scale = std::max(scale, std::abs(a(i, j)));
  double asym = 0.0;
  for (int i = 0; i < k; ++i) {
    asym = std::max(asym, std::abs(a(i, i).imag()));
    for (int j = i + 1; j < k; ++j) {
      asym = std::max(asym, std::abs(a(i, j) - std::conj(a(j, i))));
    }
  }
  if (asym > 1e-12 * scale) {
    throw std::invalid_argument("solve_hpd: matrix is not Hermitian");
  }

  std::vector<Complex> fac(a.data(), a.data() + static_cast<std::size_t>(k) * k);
  if (!detail::cholesky_in_place(fac.data(), k)) {
    throw NumericsError("solve_hpd: non-positive pivot (matrix not positive definite)");
  }

  ComplexMatrix x = b;
  detail::cholesky_solve_in_place(fac.data(), k, x.data(), b.cols());
  return x;
}

}  // namespace hycomb
