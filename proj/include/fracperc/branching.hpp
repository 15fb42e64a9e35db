// Branching-process quantities of the retained-cell counts: the offspring
// generating function, its smallest fixed point (extinction probability), and
// the dimension formula log(sum p) / log M.
#pragma once

#include <optional>

#include "fracperc/level_set.hpp"
#include "fracperc/params.hpp"

namespace fracperc {

// Offspring generating function G(s) = prod_i (1 - p_i + p_i s).
double offspring_gf(const PercolationParams& params, double s);

// Smallest fixed point of G in [0, 1], to absolute tolerance 1e-12, by
// monotone iteration from 0. Equals 1 iff the mean offspring count is <= 1
// and the offspring distribution is non-degenerate.
double extinction_probability(const PercolationParams& params);

// log(sum p) / log M; empty when sum p < 1 (subcritical, the set a.s. dies).
std::optional<double> expected_dimension(const PercolationParams& params);

// Normalized cell count #cells / (sum p)^n; mean 1 over realizations.
double martingale_z(const LevelSet& set, const PercolationParams& params);

struct BranchingStats {
  double mean_offspring = 0.0;
  double extinction_prob = 1.0;
};

BranchingStats branching_stats(const PercolationParams& params);

}  // namespace fracperc
