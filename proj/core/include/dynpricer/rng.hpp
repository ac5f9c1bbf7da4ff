#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace dynpricer {

// Seeded random stream with counter-based substreams.
//
// stream(i) derives a child generator from the *root* seed and the index i,
// not from the current generator state, so work split across substreams
// reproduces the sequential result under any execution order. All variates
// are derived from raw mt19937_64 output (whose sequence the C++ standard
// pins down exactly); std::*_distribution is avoided because its output is
// implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : root_(seed), gen_(mix(seed, 0x9e3779b97f4a7c15ull)) {}

  Rng stream(std::uint64_t index) const { return Rng(mix(root_, index)); }

  std::uint64_t next_u64() { return gen_(); }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // Uniform on (0, 1): never returns 0, safe under log(log(1/u)) transforms.
  double open01() {
    double u = uniform01();
    while (u <= 0.0) u = uniform01();
    return u;
  }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  // Standard Gumbel variate: -ln(ln(1/U)) for U uniform on (0,1).
  double gumbel() { return -std::log(-std::log(open01())); }

  // Uniform index in [0, n).
  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(uniform01() * static_cast<double>(n)) % n;
  }

 private:
  // splitmix64 finalizer over seed ^ f(index); good avalanche, cheap.
  static std::uint64_t mix(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t root_;
  std::mt19937_64 gen_;
};

}  // namespace dynpricer
