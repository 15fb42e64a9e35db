// Projection directions for d = 2. The projection sends (x, y) to x - y*beta
// on the x-axis, where beta = cot(alpha) and alpha is the angle of the
// projection lines. beta in [0, 1] corresponds to alpha in [pi/4, pi/2];
// beta = 0 is the vertical-line (axis) projection. Directions outside that
// range are folded into it by the dihedral symmetries of the square, which
// also act on the probability table.
#pragma once

#include <cstdint>
#include <string>

#include "fracperc/params.hpp"

namespace fracperc {

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;  // > 0, gcd(|num|, den) = 1

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool operator==(const Rational&) const = default;
};

Rational make_rational(std::int64_t num, std::int64_t den);

struct Direction {
  bool exact = false;
  Rational beta_q;        // cot(alpha), valid when exact
  double beta = 0.0;      // always set
  std::string range_tag;  // symmetry copy the direction came from

  double alpha() const;  // angle in (0, pi/2]

  static Direction from_cot(Rational cot);
  static Direction from_beta(double beta);
};

// A direction together with the symmetry-adjusted parameters it applies to.
struct NormalizedDirection {
  Direction dir;              // beta in [0, 1]
  PercolationParams params;   // table transformed by the recorded symmetry
  std::string transform;      // "identity", "swap", "mirror", "mirror+swap"
};

NormalizedDirection normalize_direction(const PercolationParams& params, double alpha_rad);
NormalizedDirection normalize_direction(const PercolationParams& params, Rational cot);

}  // namespace fracperc
