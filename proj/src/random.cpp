#include "jacflow/random.hpp"

namespace jacflow {

std::uint64_t Rng::splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t Rng::derive(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(splitmix64(seed) + stream * 0x9E3779B97F4A7C15ull);
}

std::uint64_t Rng::uniform(std::uint64_t n) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t x;
  do x = engine_();
  while (x >= limit);
  return x % n;
}

bool Rng::bernoulli(double p) { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p; }

}  // namespace jacflow
