#include "fracl/stable.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fracl {

StableDriver::StableDriver(double alpha, std::uint64_t seed, std::uint64_t stream_id)
    : alpha_(alpha), rng_(seed, stream_id) {
  if (!(alpha > 0.0) || !(alpha <= 2.0))
    throw std::invalid_argument("StableDriver: alpha must lie in (0, 2]");
}

double StableDriver::sample_unit() {
  constexpr double half_pi = std::numbers::pi / 2.0;
  if (alpha_ == 2.0) {
    // Gaussian case, variance 2 (not 1): forced by exp(-t |xi|^2).
    return std::sqrt(2.0) * rng_.next_normal();
  }
  for (;;) {
    double u = rng_.next_uniform(-half_pi, half_pi);
    if (alpha_ == 1.0) return std::tan(u);  // Cauchy; the general formula is 0/0 here
    double e = rng_.next_exponential();
    // Chambers-Mallows-Stuck, symmetric case, unit scale:
    //   X = sin(alpha U) / cos(U)^{1/alpha} * (cos((1-alpha)U)/E)^{(1-alpha)/alpha}
    double x = std::sin(alpha_ * u) / std::pow(std::cos(u), 1.0 / alpha_) *
               std::pow(std::cos((1.0 - alpha_) * u) / e, (1.0 - alpha_) / alpha_);
    if (std::isfinite(x)) return x;
    // overflow corner of the formula (astronomically rare); redraw
  }
}

double StableDriver::sample_increment(double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("sample_increment: dt must be positive");
  return std::pow(dt, 1.0 / alpha_) * sample_unit();
}

double characteristic_exponent(double alpha, double xi) {
  return std::pow(std::abs(xi), alpha);
}

std::complex<double> empirical_char_function(std::span<const double> samples, double xi) {
  if (samples.empty())
    throw std::invalid_argument("empirical_char_function: empty sample set");
  double re = 0.0, im = 0.0;
  for (double x : samples) {
    re += std::cos(xi * x);
    im += std::sin(xi * x);
  }
  double m = static_cast<double>(samples.size());
  return {re / m, im / m};
}

}  // namespace fracl
