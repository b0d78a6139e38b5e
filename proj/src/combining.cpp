#include "hycomb/combining.hpp"

#include <cmath>
#include <stdexcept>

#include "hycomb/numerics.hpp"

namespace hycomb {

namespace {

// A = I_K + snr * H_e^H H_e, built exactly Hermitian (lower triangle mirrored,
// diagonal forced real).
void build_normal_matrix(const Complex* h_e, int k, double snr, Complex* a) {
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j <= i; ++j) {
      Complex acc(0.0, 0.0);
      for (int m = 0; m < k; ++m) acc += std::conj(h_e[m * k + i]) * h_e[m * k + j];
      if (i == j) {
        a[i * k + i] = Complex(1.0 + snr * acc.real(), 0.0);
      } else {
        a[i * k + j] = snr * acc;
        a[j * k + i] = std::conj(snr * acc);
      }
    }
  }
}

// SINR of `user` for the combining vector g (length n_rx) against channel h.
double sinr_of_vector(const Complex* g, const ComplexMatrix& h, int user, double snr) {
  const int n = h.rows();
  const int k = h.cols();
  double noise = 0.0;
  for (int i = 0; i < n; ++i) noise += std::norm(g[i]);
  if (noise <= 0.0) return 0.0;

  double signal = 0.0;
  double interference = 0.0;
  for (int u = 0; u < k; ++u) {
    Complex acc(0.0, 0.0);
    for (int i = 0; i < n; ++i) acc += std::conj(g[i]) * h(i, u);
    const double p = std::norm(acc);
    if (u == user) {
      signal = p;
    } else {
      interference += p;
    }
  }
  return snr * signal / (snr * interference + noise);
}

}  // namespace

ComplexMatrix effective_channel(const AnalogCombiner& w_rf, const ComplexMatrix& h) {
  if (w_rf.w_rf.rows() != h.rows()) {
    throw std::invalid_argument("effective_channel: antenna counts differ");
  }
  return w_rf.w_rf.hermitian_times(h);
}

ComplexMatrix mmse_combiner(const ComplexMatrix& h_e, double snr_linear) {
  if (h_e.rows() != h_e.cols()) {
    throw std::invalid_argument("mmse_combiner: effective channel must be square");
  }
  if (!(snr_linear > 0.0)) {
    throw std::invalid_argument("mmse_combiner: snr_linear must be > 0");
  }
  const int k = h_e.rows();

  std::vector<Complex> a(static_cast<std::size_t>(k) * k);
  build_normal_matrix(h_e.data(), k, snr_linear, a.data());
  if (!detail::cholesky_in_place(a.data(), k)) {
    throw NumericsError("mmse_combiner: numerically singular system");
  }

  ComplexMatrix w_bb = h_e.hermitian();  // right-hand sides: columns of H_e^H
  detail::cholesky_solve_in_place(a.data(), k, w_bb.data(), k);
  return w_bb;
}

double sinr(int user, const AnalogCombiner& w_rf, const ComplexMatrix& w_bb,
            const ComplexMatrix& h, double snr_linear) {
  const int n = h.rows();
  const int k = h.cols();
  if (user < 0 || user >= k) throw std::invalid_argument("sinr: user index out of range");
  if (w_rf.w_rf.rows() != n || w_rf.w_rf.cols() != w_bb.rows() || w_bb.cols() != k) {
    throw std::invalid_argument("sinr: dimension mismatch");
  }
  std::vector<Complex> g(n, Complex(0.0, 0.0));
  for (int m = 0; m < w_rf.w_rf.cols(); ++m) {
    const Complex wm = w_bb(m, user);
    for (int i = 0; i < n; ++i) g[i] += w_rf.w_rf(i, m) * wm;
  }
  return sinr_of_vector(g.data(), h, user, snr_linear);
}

double sum_rate(const std::vector<double>& sinr_per_user) {
  double c = 0.0;
  for (double s : sinr_per_user) c += std::log2(1.0 + s);
  return c;
}

LinkMetrics link_metrics(const AnalogCombiner& w_rf, const ComplexMatrix& h, double snr_linear) {
  const ComplexMatrix h_e = effective_channel(w_rf, h);
  const ComplexMatrix w_bb = mmse_combiner(h_e, snr_linear);
  LinkMetrics m;
  m.snr_linear = snr_linear;
  m.sinr_per_user.resize(h.cols());
  for (int u = 0; u < h.cols(); ++u) m.sinr_per_user[u] = sinr(u, w_rf, w_bb, h, snr_linear);
  m.sum_rate = sum_rate(m.sinr_per_user);
  return m;
}

double combiner_sinr(const ComplexMatrix& combiners, const ComplexMatrix& h, int user,
                     double snr_linear) {
  if (combiners.rows() != h.rows() || combiners.cols() != h.cols()) {
    throw std::invalid_argument("combiner_sinr: dimension mismatch");
  }
  if (user < 0 || user >= h.cols()) throw std::invalid_argument("combiner_sinr: bad user index");
  const int n = h.rows();
  std::vector<Complex> g(n);
  for (int i = 0; i < n; ++i) g[i] = combiners(i, user);
  return sinr_of_vector(g.data(), h, user, snr_linear);
}

LinkEvaluator::LinkEvaluator(int n_rx, int k_users) : n_rx_(n_rx), k_(k_users) {
  if (n_rx < 1 || k_users < 1) throw std::invalid_argument("LinkEvaluator: dimensions must be >= 1");
  const std::size_t kk = static_cast<std::size_t>(k_) * k_;
  h_e_.resize(kk);
  a_.resize(kk);
  w_bb_.resize(kk);
  v_.resize(k_);
}

double LinkEvaluator::sum_rate_masked(const ComplexMatrix& w_tilde, const SelectionMatrix& s,
                                      const ComplexMatrix& h, double snr_linear) {
  if (s.n_rx() != n_rx_ || s.k_users() != k_) {
    throw std::invalid_argument("LinkEvaluator: selection dimensions differ");
  }
  return evaluate(w_tilde, &s, h, snr_linear);
}

double LinkEvaluator::sum_rate_full(const ComplexMatrix& w_rf, const ComplexMatrix& h,
                                    double snr_linear) {
  return evaluate(w_rf, nullptr, h, snr_linear);
}

double LinkEvaluator::evaluate(const ComplexMatrix& w, const SelectionMatrix* mask,
                               const ComplexMatrix& h, double snr_linear) {
  if (w.rows() != n_rx_ || w.cols() != k_ || h.rows() != n_rx_ || h.cols() != k_) {
    throw std::invalid_argument("LinkEvaluator: operand dimensions differ");
  }
  const int n = n_rx_;
  const int k = k_;

  // Effective channel W_RF^H H; masked-out entries contribute nothing.
  for (int c = 0; c < k; ++c) {
    for (int u = 0; u < k; ++u) {
      Complex acc(0.0, 0.0);
      for (int i = 0; i < n; ++i) {
        if (mask && !mask->get(i, c)) continue;
        acc += std::conj(w(i, c)) * h(i, u);
      }
      h_e_[static_cast<std::size_t>(c) * k + u] = acc;
    }
  }

  build_normal_matrix(h_e_.data(), k, snr_linear, a_.data());
  if (!detail::cholesky_in_place(a_.data(), k)) {
    throw NumericsError("LinkEvaluator: numerically singular system");
  }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      w_bb_[static_cast<std::size_t>(i) * k + j] = std::conj(h_e_[static_cast<std::size_t>(j) * k + i]);
  detail::cholesky_solve_in_place(a_.data(), k, w_bb_.data(), k);

  double rate = 0.0;
  for (int u = 0; u < k; ++u) {
    // v = w_bb_u^H H_e gives the signal and interference inner products.
    for (int i = 0; i < k; ++i) {
      Complex acc(0.0, 0.0);
      for (int m = 0; m < k; ++m) {
        acc += std::conj(w_bb_[static_cast<std::size_t>(m) * k + u]) *
               h_e_[static_cast<std::size_t>(m) * k + i];
      }
      v_[i] = acc;
    }
    double signal = 0.0;
    double interference = 0.0;
    for (int i = 0; i < k; ++i) {
      const double p = std::norm(v_[i]);
      if (i == u) {
        signal = p;
      } else {
        interference += p;
      }
    }
    // Noise term: squared norm of the full combining vector W_RF w_bb_u.
    double noise = 0.0;
    for (int i = 0; i < n; ++i) {
      Complex acc(0.0, 0.0);
      for (int m = 0; m < k; ++m) {
        if (mask && !mask->get(i, m)) continue;
        acc += w(i, m) * w_bb_[static_cast<std::size_t>(m) * k + u];
      }
      noise += std::norm(acc);
    }
    const double s = (noise <= 0.0) ? 0.0 : snr_linear * signal / (snr_linear * interference + noise);
    rate += std::log2(1.0 + s);
  }
  return rate;
}

}  // namespace hycomb
