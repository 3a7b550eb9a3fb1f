#pragma once

#include <cstdint>
#include <random>

#include "dimwit/errors.hpp"

namespace dimwit {

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Stable substream derivation: one master seed, deterministic per-index
// streams regardless of evaluation order or thread count. Each index is
// folded in after a full mix so distinct (a, b, c) tuples decorrelate.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a = 0,
                                 std::uint64_t b = 0, std::uint64_t c = 0) {
  std::uint64_t s = master;
  s = splitmix64(s) ^ (0x243f6a8885a308d3ull + a);
  s = splitmix64(s) ^ (0x13198a2e03707344ull + b);
  s = splitmix64(s) ^ (0xa4093822299f31d0ull + c);
  return splitmix64(s);
}

inline double uniform01(Rng& rng) {
  return (rng() >> 11) * 0x1.0p-53;  // 53-bit mantissa in [0,1)
}

inline double uniform(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

// Exact binomial draw by inverse transform. The outcome probabilities are
// enumerated starting at the mode and alternating outward, which keeps the
// walk short and avoids pmf underflow for large n.
std::int64_t binomial_sample(std::int64_t n, double p, Rng& rng);

}  // namespace dimwit
