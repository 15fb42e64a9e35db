// Cell addresses. A level-n cell is a word of n symbols; its cube has corner
// coordinates in [0, M^n - 1]^d with the first letter as the most significant
// base-M digit of each coordinate.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace fracperc {

struct CellWord {
  int d = 2;
  int M = 3;
  std::vector<std::uint32_t> letters;  // flat symbol indices, outermost first

  int level() const { return static_cast<int>(letters.size()); }

  // k-th component of a flat symbol index (k in [0, d)).
  std::uint32_t component(std::uint32_t letter, int k) const;

  // Integer corner coordinates of the addressed cube at this level.
  std::vector<std::uint64_t> corner() const;

  static CellWord from_corner(int d, int M, int n, std::span<const std::uint64_t> corner);

  bool operator==(const CellWord&) const = default;
};

}  // namespace fracperc
