#pragma once

#include <complex>
#include <cstdint>

namespace threeqb {

/// Deterministic counter-based pseudo-random stream (splitmix64).
///
/// The generator is the splitmix64 mixer over a counter advanced by the
/// golden-gamma increment; the algorithm and its constants are fixed forever,
/// so a given seed reproduces the same sample sequence on every platform.
/// Gaussian variates come from an explicit Box-Muller transform on the
/// generator's own uniforms (never from library distributions, whose
/// sequences are implementation-defined).
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : state_(seed) {}

  /// Independent substream seed for trial/restart `index` of a base seed.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next_u64();

  /// Uniform on [0, 1).
  double uniform();
  /// Uniform on (0, 1]; safe as a log() argument.
  double uniform_open();
  /// Uniform integer in [0, n).
  std::uint64_t uniform_index(std::uint64_t n);

  /// Standard complex Gaussian: re and im are independent N(0,1).
  std::complex<double> complex_gaussian();

 private:
  std::uint64_t state_;
};

}  // namespace threeqb
