#include "fracperc/grid_function.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "fracperc/errors.hpp"
#include "fracperc/rng.hpp"

namespace fracperc {

GridFunction::GridFunction(double lo, double hi, int intervals) : lo_(lo), hi_(hi) {
  if (!(hi > lo)) throw ConfigError("grid domain must have positive length");
  if (intervals < 2) throw ConfigError("grid needs at least 2 intervals");
  values_.assign(static_cast<std::size_t>(intervals) + 1, 0.0);
}

GridFunction GridFunction::sampled(double lo, double hi, int intervals,
                                   const std::function<double(double)>& f) {
  GridFunction g(lo, hi, intervals);
  for (int k = 0; k <= intervals; ++k) g.values_[static_cast<std::size_t>(k)] = f(g.node(k));
  return g;
}

double GridFunction::eval(double x) const {
  if (x < lo_ || x > hi_) return 0.0;
  const double t = (x - lo_) / (hi_ - lo_) * intervals();
  const int k = std::min(static_cast<int>(t), intervals() - 1);
  const double frac = t - k;
  return values_[static_cast<std::size_t>(k)] * (1.0 - frac) +
         values_[static_cast<std::size_t>(k) + 1] * frac;
}

double GridFunction::integral() const {
  double s = 0.5 * (values_.front() + values_.back());
  for (std::size_t k = 1; k + 1 < values_.size(); ++k) s += values_[k];
  return s * step();
}

double GridFunction::max_value() const {
  return *std::max_element(values_.begin(), values_.end());
}

double GridFunction::max_abs_diff(const GridFunction& other) const {
  if (values_.size() != other.values_.size()) throw ConfigError("grid resolution mismatch");
  double m = 0.0;
  for (std::size_t k = 0; k < values_.size(); ++k)
    m = std::max(m, std::abs(values_[k] - other.values_[k]));
  return m;
}

std::uint64_t GridFunction::digest() const {
  std::uint64_t h = mix64(std::bit_cast<std::uint64_t>(lo_) ^ values_.size());
  h = mix64(h ^ std::bit_cast<std::uint64_t>(hi_));
  for (double v : values_) h = mix64(h ^ std::bit_cast<std::uint64_t>(v));
  return h;
}

GridFunction& GridFunction::scale(double factor) {
  for (double& v : values_) v *= factor;
  return *this;
}

GridFunction make_trapezoid(double beta, int intervals) {
  if (!(beta >= 0.0 && beta <= 1.0)) throw ConfigError("trapezoid needs beta in [0, 1]");
  return GridFunction::sampled(-beta, 1.0, intervals, [beta](double x) {
    if (beta == 0.0) return (x >= 0.0 && x <= 1.0) ? 1.0 : 0.0;
    if (x < 0.0) return std::max(0.0, (x + beta) / beta);
    if (x <= 1.0 - beta) return 1.0;
    return std::max(0.0, (1.0 - x) / beta);
  });
}

GridFunction make_tent(double lo, double hi, int intervals) {
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  return GridFunction::sampled(lo, hi, intervals, [mid, half](double x) {
    return std::max(0.0, 1.0 - std::abs(x - mid) / half);
  });
}

}  // namespace fracperc
