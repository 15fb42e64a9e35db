// Small statistics helpers: least-squares line fits and sample moments.
// Accumulation is done in fixed index order so results are bit-reproducible.
#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace fracperc {

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double stderr_slope = 0.0;
  double r2 = 0.0;
};

inline LineFit fit_line(std::span<const double> xs, std::span<const double> ys) {
  const std::size_t n = xs.size();
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += xs[i];
    sy += ys[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double rss = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = ys[i] - (f.intercept + f.slope * xs[i]);
    rss += r * r;
  }
  f.stderr_slope = n > 2 ? std::sqrt(rss / (static_cast<double>(n) - 2.0) / sxx) : 0.0;
  f.r2 = syy > 0 ? 1.0 - rss / syy : 1.0;
  return f;
}

inline double mean_of(std::span<const double> v) {
  double s = 0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

inline double variance_of(std::span<const double> v) {
  const double m = mean_of(v);
  double s = 0;
  for (double x : v) s += (x - m) * (x - m);
  return s / (static_cast<double>(v.size()) - 1.0);
}

// A box-count regression: slope of log(count) against level * log(M).
struct DimensionFit {
  std::vector<int> levels;
  std::vector<double> log_counts;
  double slope = 0.0;
  double stderr_slope = 0.0;
  double r2 = 0.0;
};

// Throws on nonpositive counts or fewer than min_levels levels.
DimensionFit fit_box_dimension(std::span<const int> levels, std::span<const std::uint64_t> counts,
                               int M, std::size_t min_levels);

// Linear-interpolation quantile of a pre-sorted sample.
inline double quantile_sorted(std::span<const double> sorted, double q) {
  if (sorted.empty()) return 0.0;
  const double pos = q * (static_cast<double>(sorted.size()) - 1.0);
  const std::size_t lo = static_cast<std::size_t>(pos);
  if (lo + 1 >= sorted.size()) return sorted.back();
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] * (1.0 - frac) + sorted[lo + 1] * frac;
}

}  // namespace fracperc
