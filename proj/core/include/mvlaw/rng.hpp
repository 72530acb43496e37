#pragma once

#include <cstdint>
#include <initializer_list>

namespace mvlaw {

/// Counter-based randomness: every draw is a pure hash of its coordinates
/// (seed, sample index, relation index, cell index, ...), so parallel or
/// reordered sampling produces bit-identical streams.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline std::uint64_t counter_hash(std::initializer_list<std::uint64_t> coords) {
  std::uint64_t h = 0x6a09e667f3bcc908ull;
  for (std::uint64_t c : coords) h = splitmix64(h ^ splitmix64(c));
  return h;
}

/// Uniform double in [0, 1) from a hash value.
inline double u01(std::uint64_t h) { return static_cast<double>(h >> 11) * 0x1.0p-53; }

}  // namespace mvlaw
