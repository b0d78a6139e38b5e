#pragma once

#include <vector>

#include "hycomb/complex_matrix.hpp"
#include "hycomb/rf.hpp"

namespace hycomb {

struct LinkMetrics {
  std::vector<double> sinr_per_user;  // linear scale, all >= 0
  double sum_rate = 0.0;              // bits/s/Hz
  double snr_linear = 0.0;            // transmit power over noise variance
};

/// Effective channel seen by the digital stage: W_RF^H H (K x K).
ComplexMatrix effective_channel(const AnalogCombiner& w_rf, const ComplexMatrix& h);

/// MMSE digital combiner: column k solves
/// (I_K + snr * H_e^H H_e) w = (column k of H_e^H).
ComplexMatrix mmse_combiner(const ComplexMatrix& h_e, double snr_linear);

/// Post-combining SINR of `user`: the combining vector is
/// W_RF * (column `user` of w_bb); noise variance is 1, received power is
/// snr_linear. Returns 0 when the combining vector is identically zero.
double sinr(int user, const AnalogCombiner& w_rf, const ComplexMatrix& w_bb,
            const ComplexMatrix& h, double snr_linear);

/// Sum rate over users in bits/s/Hz: sum of log2(1 + SINR_k).
double sum_rate(const std::vector<double>& sinr_per_user);

/// Effective channel + MMSE combiner + per-user SINRs + sum rate in one call.
LinkMetrics link_metrics(const AnalogCombiner& w_rf, const ComplexMatrix& h, double snr_linear);

/// SINR of `user` when the receiver combines with column `user` of an
/// explicit full-dimension combiner matrix (N_rx x K). Shared by the hybrid
/// and fully digital paths.
double combiner_sinr(const ComplexMatrix& combiners, const ComplexMatrix& h, int user,
                     double snr_linear);

/// Reusable sum-rate evaluation workspace. Runs the same arithmetic as the
/// one-shot functions above without per-call allocation; every selection
/// search and the sweep runner evaluate through this class, so equal
/// selections produce bit-identical rates.
class LinkEvaluator {
 public:
  LinkEvaluator(int n_rx, int k_users);

  /// Sum rate of the combiner S (.) w_tilde against channel h.
  double sum_rate_masked(const ComplexMatrix& w_tilde, const SelectionMatrix& s,
                         const ComplexMatrix& h, double snr_linear);
  /// Sum rate of an explicit analog combiner matrix (no masking).
  double sum_rate_full(const ComplexMatrix& w_rf, const ComplexMatrix& h, double snr_linear);

 private:
  double evaluate(const ComplexMatrix& w, const SelectionMatrix* mask, const ComplexMatrix& h,
                  double snr_linear);

  int n_rx_ = 0;
  int k_ = 0;
  std::vector<Complex> h_e_;   // K x K effective channel
  std::vector<Complex> a_;     // K x K normal-equation matrix / Cholesky factor
  std::vector<Complex> w_bb_;  // K x K digital combiner (column per user)
  std::vector<Complex> v_;     // scratch, length K
};

}  // namespace hycomb
