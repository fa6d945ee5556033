#pragma once

#include <cstdint>
#include <random>

namespace jacflow {

// Seeded generator with independent substreams. The engine is mt19937_64
// seeded with derive(seed, stream), where
//   derive(s, k) = splitmix64(splitmix64(s) + k * 0x9E3779B97F4A7C15)
// and splitmix64 is Vigna's finaliser. uniform() uses rejection sampling and
// bernoulli() compares a 53-bit fraction, so draws are identical on every
// platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) : engine_(derive(seed, stream)) {}

  static std::uint64_t splitmix64(std::uint64_t x);
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, n); n must be positive.
  std::uint64_t uniform(std::uint64_t n);
  /// Uniform on [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + uniform(hi - lo + 1); }
  bool bernoulli(double p);

 private:
  std::mt19937_64 engine_;
};

}  // namespace jacflow
