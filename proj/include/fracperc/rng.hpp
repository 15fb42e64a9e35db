// Counter-based randomness: each cell address hashes to one uniform draw,
// independent of traversal order. This keeps replicated sampling reproducible
// and makes monotone coupling across probability tables exact, because the
// draw for a cell never depends on the probability table.
#pragma once

#include <cstdint>
#include <span>

namespace fracperc {

// SplitMix64 finalizer (Steele/Lea/Flood; Vigna's fixed-increment variant).
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Hash chain along a cell word. The root carries no draw (X at the root is 1).
constexpr std::uint64_t chain_root(std::uint64_t seed) {
  return mix64(seed ^ 0x5bf0f1744a2f6ba7ull);
}

constexpr std::uint64_t chain_extend(std::uint64_t h, std::uint32_t letter) {
  return mix64(h ^ (0x9e3779b97f4a7c15ull * (static_cast<std::uint64_t>(letter) + 1)));
}

// 53-bit uniform in [0, 1).
constexpr double unit_from_bits(std::uint64_t h) {
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

// The retention draw for a cell word, given as flat letter indices from the
// outermost letter down. A cell is retained iff its draw is < p of its last
// letter.
inline double retention_draw(std::uint64_t seed, std::span<const std::uint32_t> letters) {
  std::uint64_t h = chain_root(seed);
  for (std::uint32_t letter : letters) h = chain_extend(h, letter);
  return unit_from_bits(h);
}

// Derives per-replicate seeds for Monte Carlo drivers.
constexpr std::uint64_t replicate_seed(std::uint64_t base, std::uint64_t index) {
  return mix64(base ^ (0xd1342543de82ef95ull * (index + 1)));
}

}  // namespace fracperc
