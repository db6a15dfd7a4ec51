#pragma once

#include <cstdint>
#include <random>

namespace gp {

// splitmix64 finalizer.
inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Independent stream seed for (master, stream). Used for per-repetition and
// per-video sampling so parallel loops stay reproducible.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  return mix_seed(master ^ mix_seed(stream + 0x632be59bd9b4e019ULL));
}

// Uniform double in [0,1) from 53 random bits. Drawn straight from the
// engine so sequences match across standard-library implementations.
inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_real(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform_unit(rng);
}

// Unbiased integer in [0, n) by rejection.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) return 0;
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t v = rng();
  while (v >= limit) v = rng();
  return v % n;
}

}  // namespace gp
