#pragma once

#include <cmath>
#include <cstdint>

namespace foothold {

// PCG32 (pcg_xsh_rr_64_32). Output is identical on every platform for a
// given (seed, stream), which is what makes byte-identical terrain and
// episode replay possible. Distribution helpers are hand-rolled on top of
// the raw 32-bit output instead of <random> distributions, whose results
// are implementation-defined.
class Pcg32 {
 public:
  explicit Pcg32(uint64_t seed = 0x853c49e6748fea9bULL, uint64_t stream = 1) {
    state_ = 0;
    inc_ = (stream << 1u) | 1u;
    next_u32();
    state_ += seed;
    next_u32();
  }

  uint32_t next_u32() {
    uint64_t old = state_;
    state_ = old * 6364136223846793005ULL + inc_;
    uint32_t xorshifted = static_cast<uint32_t>(((old >> 18u) ^ old) >> 27u);
    uint32_t rot = static_cast<uint32_t>(old >> 59u);
    return (xorshifted >> rot) | (xorshifted << ((-rot) & 31u));
  }

  // Uniform in [0, 1) with 32 bits of resolution.
  double next_double() {
    return next_u32() * (1.0 / 4294967296.0);
  }

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * next_double();
  }

  // Uniform integer in [0, n). Rejection-free modulo bias is irrelevant at
  // our n (<= a few dozen) but use Lemire reduction anyway; it is exact.
  uint32_t uniform_u32(uint32_t n) {
    uint64_t m = static_cast<uint64_t>(next_u32()) * n;
    return static_cast<uint32_t>(m >> 32);
  }

  bool bernoulli(double p) { return next_double() < p; }

  // Box-Muller; consumes exactly two draws per call.
  double normal(double mean = 0.0, double stddev = 1.0) {
    double u1 = next_double();
    double u2 = next_double();
    if (u1 < 1e-300) u1 = 1e-300;
    double r = std::sqrt(-2.0 * std::log(u1));
    return mean + stddev * r * std::cos(6.283185307179586 * u2);
  }

 private:
  uint64_t state_;
  uint64_t inc_;
};

// Named sub-streams so that independent random purposes (pit depth, per-stone
// heights, jitter, ...) never share draws and stay reproducible when one
// consumer changes how many values it takes.
enum class RngStream : uint64_t {
  kPitDepth = 1,
  kElementHeights = 2,
  kStoneJitter = 3,
  kColumnOffsets = 4,
  kEpisode = 5,
  kCommand = 6,
  kSchedule = 7,
  kNoise = 8,
};

inline Pcg32 make_rng(uint64_t seed, RngStream stream) {
  return Pcg32(seed, static_cast<uint64_t>(stream));
}

}  // namespace foothold
