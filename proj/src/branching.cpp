#include "fracperc/branching.hpp"

#include <cmath>

#include "fracperc/errors.hpp"

namespace fracperc {

double offspring_gf(const PercolationParams& params, double s) {
  double g = 1.0;
  for (double p : params.probs) g *= 1.0 - p + p * s;
  return g;
}

double extinction_probability(const PercolationParams& params) {
  const double mean = params.sum_probs();
  if (mean <= 1.0) {
    // Offspring identically 1 (exactly one certain child) never dies out;
    // every other distribution with mean <= 1 dies out almost surely.
    int ones = 0;
    bool fractional = false;
    for (double p : params.probs) {
      if (p == 1.0) ++ones;
      else if (p > 0.0) fractional = true;
    }
    if (ones == 1 && !fractional) return 0.0;
    return 1.0;
  }
  double q = 0.0;
  for (int it = 0; it < 1 << 20; ++it) {
    const double next = offspring_gf(params, q);
    if (std::abs(next - q) < 1e-13) return next;
    q = next;
  }
  return q;
}

std::optional<double> expected_dimension(const PercolationParams& params) {
  const double sum = params.sum_probs();
  if (sum < 1.0) return std::nullopt;
  return std::log(sum) / std::log(static_cast<double>(params.M));
}

double martingale_z(const LevelSet& set, const PercolationParams& params) {
  const double sum = params.sum_probs();
  if (!(sum > 1.0)) throw ConfigError("martingale normalizer needs sum of probabilities > 1");
  return static_cast<double>(set.count()) / std::pow(sum, set.n);
}

BranchingStats branching_stats(const PercolationParams& params) {
  return {params.sum_probs(), extinction_probability(params)};
}

}  // namespace fracperc
