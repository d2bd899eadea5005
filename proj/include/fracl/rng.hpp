#pragma once

#include <cstdint>

namespace fracl {

/// Counter-style pseudo-random stream in the SplittableRandom design: a
/// 64-bit state advanced by a per-stream odd increment (gamma), pushed
/// through a strong mixing finalizer.  Streams with distinct ids walk
/// distinct sequences and may be advanced fully in parallel; two streams
/// built from the same (seed, stream_id) reproduce bit-identical output.
class RngStream {
 public:
  RngStream() : RngStream(0, 0) {}
  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t next_u64();

  /// Uniform on the open interval (0,1); never returns 0 or 1.
  double next_open01();

  /// Uniform on the open interval (a,b).
  double next_uniform(double a, double b);

  /// Standard exponential, rate 1.
  double next_exponential();

  /// Standard normal via Box-Muller (two uniforms per draw, no cache).
  double next_normal();

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_; }

 private:
  std::uint64_t state_;
  std::uint64_t gamma_;
  std::uint64_t seed_;
  std::uint64_t stream_;
};

/// SplitMix64 finalizer (Stafford mix13).
std::uint64_t mix64(std::uint64_t z);

}  // namespace fracl
