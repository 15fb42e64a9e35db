// A sampled level-n approximation: the set of retained cell addresses, stored
// as integer corner coordinates. Immutable after construction and safe to
// share across threads.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fracperc/cell.hpp"

namespace fracperc {

struct LevelSet {
  int d = 2;
  int M = 2;
  int n = 0;
  std::uint64_t params_digest = 0;
  // d coordinates per cell, cells sorted lexicographically by coordinate tuple.
  std::vector<std::uint32_t> coords;

  std::size_t count() const { return d == 0 ? 0 : coords.size() / static_cast<std::size_t>(d); }
  std::span<const std::uint32_t> cell(std::size_t idx) const {
    return {coords.data() + idx * static_cast<std::size_t>(d), static_cast<std::size_t>(d)};
  }

  CellWord word(std::size_t idx) const;
  bool contains(std::span<const std::uint32_t> cell) const;

  // The level-k ancestor set (coordinates divided by M^(n-k), deduplicated).
  LevelSet prefix_set(int k) const;

  void sort_cells();

  bool operator==(const LevelSet&) const = default;
};

// Swaps the two coordinates of every cell (d = 2).
LevelSet transpose_xy(const LevelSet& set);

}  // namespace fracperc
