#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <vector>

#include "hycomb/complex_matrix.hpp"

namespace hycomb {

struct ChannelConfig {
  int n_rx = 64;               // receive antennas at the base station
  int n_users = 16;            // single-antenna uplink users
  int n_paths = 15;            // propagation paths per user
  double spacing_ratio = 0.5;  // antenna spacing over carrier wavelength
  std::uint64_t seed = 1;
};

void validate(const ChannelConfig& cfg);

/// One drawn uplink channel: per-user path gains and arrival angles plus the
/// assembled N_rx x K matrix.
struct ChannelRealization {
  ComplexMatrix h;
  std::vector<Complex> path_gains;  // gain of (user k, path l) at k * n_paths + l
  std::vector<double> aoas;         // radians in [0, 2*pi), same layout
};

/// Unit-norm response of an N_rx-element uniform linear array to a planar
/// wavefront arriving at angle phi.
std::vector<Complex> array_response(double phi, int n_rx, double spacing_ratio);

/// Deterministic 64-bit stream key for trial `trial` of a run seeded with
/// `seed` (SplitMix64 counter construction). Distinct trials get independent
/// streams, so parallel trial workers stay reproducible.
std::uint64_t stream_key(std::uint64_t seed, std::uint64_t trial);
std::mt19937_64 make_rng(std::uint64_t key);

/// Draws path gains (circularly-symmetric unit-variance complex Gaussians)
/// and arrival angles (uniform on [0, 2*pi)), then assembles the channel
/// matrix. Draw order is fixed: users ascending, paths ascending, gain
/// before angle.
ChannelRealization generate_channel(const ChannelConfig& cfg, std::mt19937_64& rng);
/// Convenience overload using stream (cfg.seed, trial 0).
ChannelRealization generate_channel(const ChannelConfig& cfg);

/// Rebuilds the channel matrix from stored gains/angles; bit-identical to
/// the matrix assembled by generate_channel for the same inputs.
ComplexMatrix assemble_channel(const ChannelConfig& cfg,
                               const std::vector<Complex>& gains,
                               const std::vector<double>& aoas);

// Binary dump of realizations, used as regression fixtures. Records are
// fixed-layout little-endian: stream key, dimensions, spacing ratio, then
// the channel entries as interleaved real/imaginary doubles.
struct ChannelDumpRecord {
  std::uint64_t stream = 0;  // RNG stream key that produced the realization
  ChannelConfig cfg;
  ComplexMatrix h;
};

void write_channel_dump(std::ostream& out, const ChannelDumpRecord& rec);
/// Returns false on clean end-of-stream; throws on a malformed record.
bool read_channel_dump(std::istream& in, ChannelDumpRecord& rec);

}  // namespace hycomb
