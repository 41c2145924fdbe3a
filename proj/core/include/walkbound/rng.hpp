#pragma once

#include <cstdint>

namespace walkbound {

// Finalizer from the SplitMix64 generator (Steele, Lea, Flood 2014): a full
// avalanche over 64 bits. Used both as the generator's output stage and to
// derive independent substream seeds.
inline uint64_t mix64(uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

// Counter-based 64-bit generator (SplitMix64). Trivially splittable: any
// (seed, index) pair names an independent stream, which makes parallel
// simulation reproducible regardless of worker count or schedule.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in [0, bound); bound > 0. Rejection-free modulo is fine here:
  // bounds are tiny against 2^64, bias is < bound/2^64.
  uint64_t next_below(uint64_t bound) { return next() % bound; }

 private:
  uint64_t state_;
};

// Stream seed for walk/instance `index` under a campaign seed.
inline uint64_t substream_seed(uint64_t seed, uint64_t index) {
  return mix64(seed ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
}

}  // namespace walkbound
