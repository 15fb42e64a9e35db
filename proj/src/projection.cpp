#include "fracperc/projection.hpp"

#include <limits>

#include "fracperc/errors.hpp"

namespace fracperc {

namespace {

std::int64_t pow_i64(std::int64_t base, int exp) {
  std::int64_t v = 1;
  for (int k = 0; k < exp; ++k) {
    if (v > std::numeric_limits<std::int64_t>::max() / base)
      throw ResourceCapError("integer overflow in scale computation");
    v *= base;
  }
  return v;
}

std::int64_t narrow(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw ResourceCapError("exact projection endpoint exceeds 64 bits");
  return static_cast<std::int64_t>(v);
}

}  // namespace

Interval project_corner(int M, int n, std::uint64_t a, std::uint64_t b, double beta) {
  double scale = 1.0;
  for (int k = 0; k < n; ++k) scale *= M;
  const double ad = static_cast<double>(a);
  const double bd = static_cast<double>(b);
  return {(ad - (bd + 1.0) * beta) / scale, (ad + 1.0 - bd * beta) / scale};
}

Interval project_cell(const CellWord& word, const Direction& dir) {
  if (word.d != 2) throw ConfigError("projection requires d = 2");
  auto corner = word.corner();
  return project_corner(word.M, word.level(), corner[0], corner[1], dir.beta);
}

IntervalUnion project_level_set(const LevelSet& set, const Direction& dir) {
  if (set.d != 2) throw ConfigError("projection requires d = 2");
  std::vector<Interval> parts;
  parts.reserve(set.count());
  for (std::size_t c = 0; c < set.count(); ++c) {
    auto cell = set.cell(c);
    parts.push_back(project_corner(set.M, set.n, cell[0], cell[1], dir.beta));
  }
  return IntervalUnion::from_intervals(std::move(parts));
}

ExactIntervalUnion project_level_set_exact(const LevelSet& set, Rational beta) {
  if (set.d != 2) throw ConfigError("projection requires d = 2");
  if (beta.num < 0) throw ConfigError("beta must be >= 0");
  ExactIntervalUnion u;
  u.den = narrow(static_cast<__int128>(pow_i64(set.M, set.n)) * beta.den);
  u.parts.reserve(set.count());
  for (std::size_t c = 0; c < set.count(); ++c) {
    auto cell = set.cell(c);
    const __int128 a = cell[0];
    const __int128 b = cell[1];
    u.parts.emplace_back(narrow(a * beta.den - (b + 1) * beta.num),
                         narrow((a + 1) * beta.den - b * beta.num));
  }
  u.normalize();
  return u;
}

ExactIntervalUnion project_pattern_exact(int M, const std::vector<std::uint8_t>& mask, int n,
                                         Rational beta) {
  if (static_cast<int>(mask.size()) != M * M) throw ConfigError("pattern mask must have M*M entries");
  if (beta.num < 0) throw ConfigError("beta must be >= 0");
  const std::int64_t side = pow_i64(M, n);
  ExactIntervalUnion u;
  u.den = narrow(static_cast<__int128>(side) * beta.den);

  if (beta.num == 0) {
    // Axis projection: only the x-digit alphabet matters.
    std::vector<int> xdigits;
    for (int i = 0; i < M; ++i) {
      for (int j = 0; j < M; ++j) {
        if (mask[static_cast<std::size_t>(j) * M + i]) {
          xdigits.push_back(i);
          break;
        }
      }
    }
    std::vector<std::int64_t> frontier{0};
    for (int level = 0; level < n; ++level) {
      std::vector<std::int64_t> next;
      next.reserve(frontier.size() * xdigits.size());
      for (std::int64_t a : frontier)
        for (int dgt : xdigits) next.push_back(a * M + dgt);
      frontier = std::move(next);
      if (frontier.size() > 20'000'000) throw ResourceCapError("pattern projection too large");
    }
    for (std::int64_t a : frontier)
      u.parts.emplace_back(narrow(static_cast<__int128>(a) * beta.den),
                           narrow(static_cast<__int128>(a + 1) * beta.den));
    u.normalize();
    return u;
  }

  std::vector<std::pair<std::int64_t, std::int64_t>> frontier{{0, 0}};
  for (int level = 0; level < n; ++level) {
    std::vector<std::pair<std::int64_t, std::int64_t>> next;
    for (auto [a, b] : frontier) {
      for (int j = 0; j < M; ++j)
        for (int i = 0; i < M; ++i)
          if (mask[static_cast<std::size_t>(j) * M + i]) next.emplace_back(a * M + i, b * M + j);
    }
    frontier = std::move(next);
    if (frontier.size() > 20'000'000) throw ResourceCapError("pattern projection too large");
  }
  u.parts.reserve(frontier.size());
  for (auto [a, b] : frontier) {
    const __int128 aa = a, bb = b;
    u.parts.emplace_back(narrow(aa * beta.den - (bb + 1) * beta.num),
                         narrow((aa + 1) * beta.den - bb * beta.num));
  }
  u.normalize();
  return u;
}

}  // namespace fracperc
