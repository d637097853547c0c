#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace cohomap {

/// Seeded, streamable random source. A fixed (seed, stream) pair always
/// reproduces the same draw sequence; distinct streams are independent
/// substreams, so samplers can be partitioned across workers.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  /// Uniform in [0, 1), 53-bit resolution.
  double uniform01();

  /// Standard normal via Box-Muller (std::normal_distribution is
  /// implementation-defined and would break reproducibility).
  double gaussian();

  /// Standard complex gaussian: E|z|^2 = 1.
  std::complex<double> complex_gaussian();

  std::uint64_t raw() { return engine_(); }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Membership-check tolerance. Accumulated-arithmetic checks default to
/// 1e-9; construction-level checks use 1e-12 at call sites.
struct Tolerance {
  double eps = 1e-9;
};

}  // namespace cohomap
