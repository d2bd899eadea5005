#pragma once

#include <complex>
#include <span>

#include "fracl/rng.hpp"

namespace fracl {

/// Generator of the driving noise: increments of the Levy process whose
/// generator is -(-Laplace)^{alpha/2}, i.e. whose increment over a window of
/// length dt has characteristic function exp(-dt |xi|^alpha).  For alpha = 2
/// this is a centered Gaussian with variance 2 dt (sqrt(2) times standard
/// Brownian motion); for alpha < 2 it is the symmetric alpha-stable law,
/// sampled by the Chambers-Mallows-Stuck construction.
class StableDriver {
 public:
  StableDriver(double alpha, std::uint64_t seed, std::uint64_t stream_id);

  /// One draw of the unit-time law (characteristic function exp(-|xi|^alpha)).
  double sample_unit();

  /// One increment over a window of length dt > 0; by self-similarity this is
  /// dt^{1/alpha} times a unit draw.
  double sample_increment(double dt);

  double alpha() const { return alpha_; }
  std::uint64_t seed() const { return rng_.seed(); }
  std::uint64_t stream_id() const { return rng_.stream_id(); }

 private:
  double alpha_;
  RngStream rng_;
};

/// Fourier symbol of (-Laplace)^{alpha/2}: |xi|^alpha.
double characteristic_exponent(double alpha, double xi);

/// (1/M) sum_m exp(i xi x_m); modulus <= 1. Throws on an empty sample set.
std::complex<double> empirical_char_function(std::span<const double> samples, double xi);

}  // namespace fracl
