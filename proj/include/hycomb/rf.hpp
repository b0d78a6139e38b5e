#pragma once

#include <cstdint>
#include <vector>

#include "hycomb/complex_matrix.hpp"

namespace hycomb {

/// The bank of constant phases available to every RF chain: entry q
/// (1-based) carries phase 2*pi*(q-1)/N_C.
class CpsCodebook {
 public:
  explicit CpsCodebook(int n_cps);

  int size() const { return static_cast<int>(phases_.size()); }
  double phase(int q) const { return phases_[static_cast<std::size_t>(q - 1)]; }
  Complex phasor(int q) const { return phasors_[static_cast<std::size_t>(q - 1)]; }

 private:
  std::vector<double> phases_;
  std::vector<Complex> phasors_;
};

struct QuantizedPhase {
  int index;     // 1-based codebook index
  double phase;  // 2*pi*(index-1)/N_C
};

/// Nearest codebook phase under wrap-around angular distance. theta is
/// normalized into [0, 2*pi) first; exact ties pick the smaller index.
QuantizedPhase quantize_phase(double theta, const CpsCodebook& codebook);

/// Antenna-to-phase-shifter switch states for one RF chain: binary
/// N_rx x N_C, each row selecting at most one phase shifter.
class SwitchingMatrix {
 public:
  SwitchingMatrix(int n_rx, int n_cps);

  int n_rx() const { return n_rx_; }
  int n_cps() const { return n_cps_; }
  bool get(int antenna, int cps) const { return delta_[index(antenna, cps)] != 0; }
  void set(int antenna, int cps, bool on) { delta_[index(antenna, cps)] = on ? 1 : 0; }

  int row_sum(int antenna) const;
  int total_active() const;

 private:
  std::size_t index(int antenna, int cps) const {
    return static_cast<std::size_t>(antenna) * n_cps_ + cps;
  }
  int n_rx_ = 0;
  int n_cps_ = 0;
  std::vector<std::uint8_t> delta_;
};

/// Binary N_rx x K antenna selection; column k lists the antennas whose
/// signals enter RF chain k's combining sum. Column-major storage so the
/// flattened view concatenates columns.
class SelectionMatrix {
 public:
  SelectionMatrix(int n_rx, int k_users);
  static SelectionMatrix all_ones(int n_rx, int k_users);

  int n_rx() const { return n_rx_; }
  int k_users() const { return k_users_; }
  bool get(int antenna, int chain) const { return s_[index(antenna, chain)] != 0; }
  void set(int antenna, int chain, bool on) { s_[index(antenna, chain)] = on ? 1 : 0; }

  int column_weight(int chain) const;

  /// Column-major flattened entries, length n_rx * k_users.
  const std::vector<std::uint8_t>& flat() const { return s_; }
  void set_flat(std::size_t j, bool on) { s_[j] = on ? 1 : 0; }

  bool operator==(const SelectionMatrix& other) const = default;

 private:
  std::size_t index(int antenna, int chain) const {
    return static_cast<std::size_t>(chain) * n_rx_ + antenna;
  }
  int n_rx_ = 0;
  int k_users_ = 0;
  std::vector<std::uint8_t> s_;
};

struct UnselectedAbf {
  std::vector<SwitchingMatrix> deltas;  // one per RF chain, every row active
  ComplexMatrix w_tilde;                // unit-modulus phase-matched combiner
};

/// First-stage analog combiner: quantizes the phase of every entry of the
/// orthonormalized channel onto the codebook and activates the matching
/// switch, so every antenna feeds every chain through one phase shifter.
/// Zero-magnitude entries get phase 0 (index 1) deterministically.
UnselectedAbf build_unselected_abf(const ComplexMatrix& h_ortho, const CpsCodebook& codebook);

struct AnalogCombiner {
  ComplexMatrix w_rf;
  SelectionMatrix selection;
  std::vector<int> per_chain_active;
};

/// Second stage: masks the unselected combiner with the antenna selection.
/// Every column of s must keep at least one antenna.
AnalogCombiner apply_selection(const ComplexMatrix& w_tilde, const SelectionMatrix& s);

}  // namespace hycomb
