// Sampling of level-n approximations: breadth-first expansion of surviving
// cells, one hash-derived draw per cell. Nesting across levels and monotone
// coupling across probability tables hold by construction.
#pragma once

#include <cstdint>

#include "fracperc/level_set.hpp"
#include "fracperc/params.hpp"

namespace fracperc {

struct SampleLimits {
  std::size_t max_cells = 50'000'000;  // memory guard; exceeding it is an error
};

LevelSet sample_level_set(const PercolationParams& params, int n, const SampleLimits& limits = {});

struct ConditionedSample {
  LevelSet set;
  int attempts = 1;  // draws consumed, including the accepted one
};

// Rejection sampling of a nonempty level-n set. Attempt k uses the seed
// derived as replicate_seed(params.seed, k). Throws ConditioningError with
// the analytic extinction probability once max_attempts empty sets have been
// drawn.
ConditionedSample sample_conditioned(const PercolationParams& params, int n,
                                     int max_attempts = 1000, const SampleLimits& limits = {});

// Cellwise intersection; both sets must share level and geometry.
LevelSet intersect_level_sets(const LevelSet& a, const LevelSet& b);

// d = 2 bit grid of side M^n, row 0 at the bottom.
struct Bitmap {
  std::int64_t side = 0;
  std::vector<std::uint8_t> bits;  // row-major from the bottom row

  bool get(std::int64_t x, std::int64_t y) const {
    return bits[static_cast<std::size_t>(y) * static_cast<std::size_t>(side) +
                static_cast<std::size_t>(x)] != 0;
  }
};

Bitmap raster(const LevelSet& set);

}  // namespace fracperc
