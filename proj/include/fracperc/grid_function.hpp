// Nonnegative functions on [-beta, 1] sampled on a uniform grid with
// piecewise-linear interpolation. Evaluation outside the domain returns 0,
// matching functions that vanish off the projection interval.
#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace fracperc {

class GridFunction {
 public:
  GridFunction() = default;
  GridFunction(double lo, double hi, int intervals);

  static GridFunction sampled(double lo, double hi, int intervals,
                              const std::function<double(double)>& f);

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  int intervals() const { return static_cast<int>(values_.size()) - 1; }
  double step() const { return (hi_ - lo_) / intervals(); }

  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }
  double node(int k) const { return lo_ + step() * k; }

  double eval(double x) const;
  double integral() const;  // trapezoid rule
  double max_value() const;
  double max_abs_diff(const GridFunction& other) const;
  std::uint64_t digest() const;

  GridFunction& scale(double factor);

 private:
  double lo_ = 0.0;
  double hi_ = 1.0;
  std::vector<double> values_;
};

// Projected-Lebesgue density of the unit square: rises over [-beta, 0],
// plateau 1 on [0, 1-beta], symmetric fall on [1-beta, 1].
GridFunction make_trapezoid(double beta, int intervals);

// Symmetric tent over (lo, hi), peak 1 at the midpoint, zero at the ends.
GridFunction make_tent(double lo, double hi, int intervals);

}  // namespace fracperc
