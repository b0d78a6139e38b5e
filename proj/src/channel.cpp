#include "hycomb/channel.hpp"

#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace hycomb {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Uniform double in [0, 1) with 53 random bits.
double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform double in (0, 1]; safe as a log argument.
double uniform_positive(std::mt19937_64& rng) {
  return static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
}

// Circularly symmetric complex Gaussian with unit variance, drawn as an
// exponential power and a uniform phase.
Complex complex_gaussian(std::mt19937_64& rng) {
  const double amp = std::sqrt(-std::log(uniform_positive(rng)));
  const double phase = kTwoPi * uniform_unit(rng);
  return Complex(amp * std::cos(phase), amp * std::sin(phase));
}

std::uint64_t splitmix_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

void validate(const ChannelConfig& cfg) {
  if (cfg.n_rx < 1 || cfg.n_users < 1 || cfg.n_paths < 1) {
    throw std::invalid_argument("ChannelConfig: counts must be >= 1");
  }
  if (!(cfg.spacing_ratio > 0.0)) {
    throw std::invalid_argument("ChannelConfig: spacing_ratio must be > 0");
  }
}

std::vector<Complex> array_response(double phi, int n_rx, double spacing_ratio) {
  if (n_rx < 1) throw std::invalid_argument("array_response: n_rx must be >= 1");
  const double scale = 1.0 / std::sqrt(static_cast<double>(n_rx));
  const double step = kTwoPi * spacing_ratio * std::sin(phi);
  std::vector<Complex> a(n_rx);
  for (int n = 0; n < n_rx; ++n) {
    const double ang = step * n;
    a[n] = Complex(scale * std::cos(ang), scale * std::sin(ang));
  }
  return a;
}

std::uint64_t stream_key(std::uint64_t seed, std::uint64_t trial) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (trial + 1);
  return splitmix_mix(splitmix_mix(z));
}

std::mt19937_64 make_rng(std::uint64_t key) { return std::mt19937_64(key); }

ComplexMatrix assemble_channel(const ChannelConfig& cfg,
                               const std::vector<Complex>& gains,
                               const std::vector<double>& aoas) {
  validate(cfg);
  const std::size_t want = static_cast<std::size_t>(cfg.n_users) * cfg.n_paths;
  if (gains.size() != want || aoas.size() != want) {
    throw std::invalid_argument("assemble_channel: gain/angle counts do not match config");
  }
  const double scale = std::sqrt(static_cast<double>(cfg.n_rx) / cfg.n_paths);
  ComplexMatrix h(cfg.n_rx, cfg.n_users);
  for (int k = 0; k < cfg.n_users; ++k) {
    for (int l = 0; l < cfg.n_paths; ++l) {
      const std::size_t idx = static_cast<std::size_t>(k) * cfg.n_paths + l;
      const std::vector<Complex> a = array_response(aoas[idx], cfg.n_rx, cfg.spacing_ratio);
      const Complex g = gains[idx];
      for (int n = 0; n < cfg.n_rx; ++n) h(n, k) += a[n] * g;
    }
  }
  for (int k = 0; k < cfg.n_users; ++k)
    for (int n = 0; n < cfg.n_rx; ++n) h(n, k) *= scale;
  return h;
}

ChannelRealization generate_channel(const ChannelConfig& cfg, std::mt19937_64& rng) {
  validate(cfg);
  const std::size_t total = static_cast<std::size_t>(cfg.n_users) * cfg.n_paths;
  ChannelRealization out;
  out.path_gains.resize(total);
  out.aoas.resize(total);
  for (int k = 0; k < cfg.n_users; ++k) {
    for (int l = 0; l < cfg.n_paths; ++l) {
      const std::size_t idx = static_cast<std::size_t>(k) * cfg.n_paths + l;
      out.path_gains[idx] = complex_gaussian(rng);
      out.aoas[idx] = kTwoPi * uniform_unit(rng);
    }
  }
  out.h = assemble_channel(cfg, out.path_gains, out.aoas);
  return out;
}

ChannelRealization generate_channel(const ChannelConfig& cfg) {
  std::mt19937_64 rng = make_rng(stream_key(cfg.seed, 0));
  return generate_channel(cfg, rng);
}

namespace {

template <typename T>
void put(std::ostream& out, const T& v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
bool get(std::istream& in, T& v) {
  in.read(reinterpret_cast<char*>(&v), sizeof(T));
  return static_cast<bool>(in);
}

constexpr std::uint32_t kDumpMagic = 0x48594348u;  // "HYCH"

}  // namespace

void write_channel_dump(std::ostream& out, const ChannelDumpRecord& rec) {
  put(out, kDumpMagic);
  put(out, rec.stream);
  put(out, static_cast<std::uint32_t>(rec.cfg.n_rx));
  put(out, static_cast<std::uint32_t>(rec.cfg.n_users));
  put(out, static_cast<std::uint32_t>(rec.cfg.n_paths));
  put(out, rec.cfg.spacing_ratio);
  put(out, rec.cfg.seed);
  for (int n = 0; n < rec.h.rows(); ++n) {
    for (int k = 0; k < rec.h.cols(); ++k) {
      put(out, rec.h(n, k).real());
      put(out, rec.h(n, k).imag());
    }
  }
  if (!out) throw std::runtime_error("write_channel_dump: stream write failed");
}

bool read_channel_dump(std::istream& in, ChannelDumpRecord& rec) {
  std::uint32_t magic = 0;
  if (!get(in, magic)) return false;  // clean EOF
  if (magic != kDumpMagic) throw std::runtime_error("read_channel_dump: bad record magic");
  std::uint32_t n_rx = 0, n_users = 0, n_paths = 0;
  if (!get(in, rec.stream) || !get(in, n_rx) || !get(in, n_users) || !get(in, n_paths) ||
      !get(in, rec.cfg.spacing_ratio) || !get(in, rec.cfg.seed)) {
    throw std::runtime_error("read_channel_dump: truncated record header");
  }
  rec.cfg.n_rx = static_cast<int>(n_rx);
  rec.cfg.n_users = static_cast<int>(n_users);
  rec.cfg.n_paths = static_cast<int>(n_paths);
  validate(rec.cfg);
  rec.h = ComplexMatrix(rec.cfg.n_rx, rec.cfg.n_users);
  for (int n = 0; n < rec.cfg.n_rx; ++n) {
    for (int k = 0; k < rec.cfg.n_users; ++k) {
      double re = 0.0, im = 0.0;
      if (!get(in, re) || !get(in, im)) {
        throw std::runtime_error("read_channel_dump: truncated record body");
      }
      rec.h(n, k) = Complex(re, im);
    }
  }
  return true;
}

}  // namespace hycomb
