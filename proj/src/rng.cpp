#include "fracl/rng.hpp"

#include <bit>
#include <cmath>

namespace fracl {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

// Variant 13 of the 64-bit mix constants (Stafford); the SplitMix64 finalizer.
std::uint64_t mix13(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Gamma derivation from the SplittableRandom construction: force the
// increment odd and reject weak bit patterns.
std::uint64_t mix_gamma(std::uint64_t z) {
  z = (z ^ (z >> 33)) * 0xff51afd7ed558ccdULL;
  z = (z ^ (z >> 33)) * 0xc4ceb9fe1a85ec53ULL;
  z = (z ^ (z >> 33)) | 1ULL;
  if (std::popcount(z ^ (z >> 1)) < 24) z ^= 0xaaaaaaaaaaaaaaaaULL;
  return z;
}

}  // namespace

std::uint64_t mix64(std::uint64_t z) { return mix13(z + kGolden); }

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_(stream_id) {
  std::uint64_t s = seed ^ mix13(kGolden * (stream_id + 0x632be59bd9b4e019ULL));
  state_ = mix13(s + kGolden);
  gamma_ = mix_gamma(s + 2 * kGolden);
}

std::uint64_t RngStream::next_u64() {
  state_ += gamma_;
  return mix13(state_);
}

double RngStream::next_open01() {
  // 53-bit mantissa shifted into (0,1): values (k + 0.5) * 2^-53.
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double RngStream::next_uniform(double a, double b) {
  return a + (b - a) * next_open01();
}

double RngStream::next_exponential() { return -std::log(next_open01()); }

double RngStream::next_normal() {
  double u1 = next_open01();
  double u2 = next_open01();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
}

}  // namespace fracl
