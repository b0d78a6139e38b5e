#include "hycomb/rf.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hycomb {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

CpsCodebook::CpsCodebook(int n_cps) {
  if (n_cps < 1) throw std::invalid_argument("CpsCodebook: n_cps must be >= 1");
  phases_.resize(n_cps);
  phasors_.resize(n_cps);
  for (int q = 0; q < n_cps; ++q) {
    const double phase = kTwoPi * q / n_cps;
    phases_[q] = phase;
    phasors_[q] = Complex(std::cos(phase), std::sin(phase));
  }
}

QuantizedPhase quantize_phase(double theta, const CpsCodebook& codebook) {
  if (!std::isfinite(theta)) throw std::invalid_argument("quantize_phase: theta must be finite");
  theta = std::fmod(theta, kTwoPi);
  if (theta < 0.0) theta += kTwoPi;

  int best_q = 1;
  double best_d = kTwoPi;
  for (int q = 1; q <= codebook.size(); ++q) {
    double d = std::abs(theta - codebook.phase(q));
    d = std::min(d, kTwoPi - d);
    if (d < best_d) {
      best_d = d;
      best_q = q;
    }
  }
  return {best_q, codebook.phase(best_q)};
}

SwitchingMatrix::SwitchingMatrix(int n_rx, int n_cps) : n_rx_(n_rx), n_cps_(n_cps) {
  if (n_rx < 1 || n_cps < 1) throw std::invalid_argument("SwitchingMatrix: dimensions must be >= 1");
  delta_.assign(static_cast<std::size_t>(n_rx) * n_cps, 0);
}

int SwitchingMatrix::row_sum(int antenna) const {
  int acc = 0;
  for (int q = 0; q < n_cps_; ++q) acc += delta_[index(antenna, q)];
  return acc;
}

int SwitchingMatrix::total_active() const {
  int acc = 0;
  for (std::uint8_t v : delta_) acc += v;
  return acc;
}

SelectionMatrix::SelectionMatrix(int n_rx, int k_users) : n_rx_(n_rx), k_users_(k_users) {
  if (n_rx < 1 || k_users < 1) throw std::invalid_argument("SelectionMatrix: dimensions must be >= 1");
  s_.assign(static_cast<std::size_t>(n_rx) * k_users, 0);
}

SelectionMatrix SelectionMatrix::all_ones(int n_rx, int k_users) {
  SelectionMatrix s(n_rx, k_users);
  for (auto& v : s.s_) v = 1;
  return s;
}

int SelectionMatrix::column_weight(int chain) const {
  int acc = 0;
  for (int n = 0; n < n_rx_; ++n) acc += s_[index(n, chain)];
  return acc;
}

UnselectedAbf build_unselected_abf(const ComplexMatrix& h_ortho, const CpsCodebook& codebook) {
  const int n_rx = h_ortho.rows();
  const int k = h_ortho.cols();

  UnselectedAbf out{{}, ComplexMatrix(n_rx, k)};
  out.deltas.reserve(k);
  for (int c = 0; c < k; ++c) out.deltas.emplace_back(n_rx, codebook.size());

  for (int c = 0; c < k; ++c) {
    for (int n = 0; n < n_rx; ++n) {
      const Complex e = h_ortho(n, c);
      double theta = 0.0;  // phase of a zero entry is defined as 0
      if (e != Complex(0.0, 0.0)) {
        theta = std::atan2(e.imag(), e.real());
        if (theta < 0.0) theta += kTwoPi;
      }
      const QuantizedPhase q = quantize_phase(theta, codebook);
      out.deltas[c].set(n, q.index - 1, true);
      out.w_tilde(n, c) = codebook.phasor(q.index);
    }
  }
  return out;
}

AnalogCombiner apply_selection(const ComplexMatrix& w_tilde, const SelectionMatrix& s) {
  if (w_tilde.rows() != s.n_rx() || w_tilde.cols() != s.k_users()) {
    throw std::invalid_argument("apply_selection: dimension mismatch");
  }
  const int n_rx = s.n_rx();
  const int k = s.k_users();

  std::vector<int> active(k, 0);
  for (int c = 0; c < k; ++c) {
    active[c] = s.column_weight(c);
    if (active[c] < 1) {
      throw std::invalid_argument("apply_selection: an RF chain has no selected antenna");
    }
  }

  AnalogCombiner out{ComplexMatrix(n_rx, k), s, std::move(active)};
  for (int c = 0; c < k; ++c)
    for (int n = 0; n < n_rx; ++n)
      if (s.get(n, c)) out.w_rf(n, c) = w_tilde(n, c);
  return out;
}

}  // namespace hycomb
