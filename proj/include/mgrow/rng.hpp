#pragma once

#include <cmath>
#include <cstdint>

#include "mgrow/errors.hpp"

namespace mgrow {

// Counter-based pseudo-random generator. Draw i of a stream keyed by `seed`
// is mix64(seed + (i+1)*golden), where mix64 is the SplitMix64 finalizer.
// Output depends only on (seed, draw index), never on platform or call
// pattern, so every artifact produced from a seed is reproducible bit-for-bit.
class CounterRng {
 public:
  explicit CounterRng(uint64_t seed) : seed_(seed) {}

  static uint64_t mix64(uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
  }

  // Derive an independent stream key, e.g. per training step or per worker.
  static uint64_t derive(uint64_t seed, uint64_t stream) {
    return mix64(seed ^ mix64(stream + 0x1F123BB5159A55E5ull));
  }

  uint64_t next_u64() { return mix64(seed_ + (++counter_) * kGolden); }

  // Uniform in (0, 1]; never 0 so log() below is safe.
  double next_uniform() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller; variates are emitted in generated pairs.
  double next_normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = next_uniform();
    const double u2 = next_uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * kPi * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
  }

  // Uniform integer in [0, n) via 128-bit multiply reduction.
  uint64_t next_below(uint64_t n) {
    if (n == 0) throw ShapeError("CounterRng::next_below: n must be > 0");
    return static_cast<uint64_t>(
        (static_cast<__uint128_t>(next_u64()) * n) >> 64);
  }

 private:
  static constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ull;
  static constexpr double kPi = 3.14159265358979323846;

  uint64_t seed_;
  uint64_t counter_ = 0;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace mgrow
