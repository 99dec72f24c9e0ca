#pragma once

#include <cmath>
#include <cstdint>

namespace drpp {

// Counter-based deterministic generator. Every draw is a pure function of
// (seed, stream, counter), so batches and synthetic datasets are reproducible
// bit-for-bit across platforms and thread counts. std::* distributions are
// implementation-defined and must not be used anywhere results depend on.
namespace rng {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t key(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
  return splitmix64(splitmix64(seed ^ 0x6a09e667f3bcc909ULL) + splitmix64(stream) + counter);
}

// Uniform in [0, 1) with 53 random bits.
inline double uniform(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
  return static_cast<double>(key(seed, stream, counter) >> 11) * 0x1.0p-53;
}

// Uniform in [lo, hi).
inline double uniform(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter,
                      double lo, double hi) {
  return lo + (hi - lo) * uniform(seed, stream, counter);
}

inline std::uint64_t index(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter,
                           std::uint64_t n) {
  return key(seed, stream, counter) % n;
}

// Standard normal via Box-Muller; consumes counters 2k and 2k+1.
inline double normal(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
  const double u1 = uniform(seed, stream, 2 * counter);
  const double u2 = uniform(seed, stream, 2 * counter + 1);
  const double r = std::sqrt(-2.0 * std::log(1.0 - u1));
  return r * std::cos(2.0 * M_PI * u2);
}

}  // namespace rng
}  // namespace drpp
