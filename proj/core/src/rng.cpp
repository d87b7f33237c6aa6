#include "threeqb/rng.hpp"

#include <cmath>
#include <numbers>

namespace threeqb {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

// splitmix64 output mix.
std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t RngStream::next_u64() { return mix(state_ += kGamma); }

std::uint64_t RngStream::derive(std::uint64_t seed, std::uint64_t index) {
  // Double mixing keeps substreams far apart in counter space, so they never
  // reuse each other's draws.
  return mix(seed ^ mix(index + kGamma));
}

double RngStream::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform_open() {
  return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

std::uint64_t RngStream::uniform_index(std::uint64_t n) {
  return next_u64() % n;
}

std::complex<double> RngStream::complex_gaussian() {
  // Box-Muller; one pair of uniforms yields one standard complex Gaussian.
  const double u1 = uniform_open();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double ang = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(ang), r * std::sin(ang)};
}

}  // namespace threeqb
