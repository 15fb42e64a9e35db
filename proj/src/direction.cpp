#include "fracperc/direction.hpp"

#include <cmath>
#include <numeric>

#include "fracperc/errors.hpp"

namespace fracperc {

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ConfigError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

double Direction::alpha() const { return std::atan2(1.0, beta); }

Direction Direction::from_cot(Rational cot) {
  Direction d;
  d.exact = true;
  d.beta_q = cot;
  d.beta = cot.value();
  d.range_tag = "identity";
  return d;
}

Direction Direction::from_beta(double beta) {
  Direction d;
  d.exact = false;
  d.beta = beta;
  d.range_tag = "identity";
  return d;
}

namespace {

NormalizedDirection finish(Direction dir, PercolationParams params, std::string transform,
                           std::string tag) {
  dir.range_tag = std::move(tag);
  return {std::move(dir), std::move(params), std::move(transform)};
}

}  // namespace

NormalizedDirection normalize_direction(const PercolationParams& params, Rational cot) {
  if (params.d != 2) throw ConfigError("directions require d = 2");
  Rational q = cot;
  PercolationParams table = params;
  std::string transform = "identity";
  if (q.num < 0) {  // obtuse angle: reflect x -> 1 - x
    q = make_rational(-q.num, q.den);
    table = mirror_x(table);
    transform = "mirror";
  }
  if (q.num > q.den) {  // alpha below pi/4: swap the two axes
    q = make_rational(q.den, q.num);
    table = transpose_xy(table);
    transform = transform == "identity" ? "swap" : "mirror+swap";
  }
  return finish(Direction::from_cot(q), std::move(table), transform, transform);
}

NormalizedDirection normalize_direction(const PercolationParams& params, double alpha_rad) {
  if (params.d != 2) throw ConfigError("directions require d = 2");
  if (!std::isfinite(alpha_rad)) throw ConfigError("direction angle must be finite");
  // Fold into [0, pi).
  const double pi = 3.14159265358979323846;
  double a = std::fmod(alpha_rad, pi);
  if (a < 0) a += pi;

  PercolationParams table = params;
  std::string transform = "identity";
  if (a > pi / 2) {  // reflect x -> 1 - x, angle pi - a
    a = pi - a;
    table = mirror_x(table);
    transform = "mirror";
  }
  double beta;
  if (a < pi / 4) {  // swap axes, cot becomes tan
    beta = std::tan(a);
    table = transpose_xy(table);
    transform = transform == "identity" ? "swap" : "mirror+swap";
  } else {
    beta = std::cos(a) / std::sin(a);
    if (beta < 0) beta = 0.0;  // alpha == pi/2 up to rounding
  }
  return finish(Direction::from_beta(beta), std::move(table), transform, transform);
}

}  // namespace fracperc
