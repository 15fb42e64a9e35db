#include "fracperc/params.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "fracperc/errors.hpp"
#include "fracperc/rng.hpp"

namespace fracperc {

double PercolationParams::sum_probs() const {
  double s = 0.0;
  for (double p : probs) s += p;
  return s;
}

bool PercolationParams::homogeneous() const {
  for (double p : probs)
    if (p != probs.front()) return false;
  return true;
}

std::uint64_t PercolationParams::digest() const {
  std::uint64_t h = mix64(0x66726163706572ull);
  h = mix64(h ^ static_cast<std::uint64_t>(d));
  h = mix64(h ^ static_cast<std::uint64_t>(M));
  h = mix64(h ^ seed);
  for (double p : probs) h = mix64(h ^ std::bit_cast<std::uint64_t>(p));
  return h;
}

namespace {

std::size_t checked_alphabet_size(int d, int M) {
  std::size_t n = 1;
  for (int k = 0; k < d; ++k) {
    if (n > std::size_t(1) << 40) throw ConfigError("alphabet too large");
    n *= static_cast<std::size_t>(M);
  }
  return n;
}

}  // namespace

PercolationParams validate_params(int d, int M, std::vector<double> probs, std::uint64_t seed) {
  if (d < 1) throw ConfigError("dimension d must be >= 1");
  if (M < 2) throw ConfigError("subdivision M must be >= 2");
  const std::size_t want = checked_alphabet_size(d, M);
  if (probs.size() != want)
    throw ConfigError("probability table has " + std::to_string(probs.size()) +
                      " entries, expected " + std::to_string(want));
  for (double p : probs) {
    if (!(p >= 0.0 && p <= 1.0)) throw ConfigError("probability out of range [0, 1]");
  }
  PercolationParams out;
  out.d = d;
  out.M = M;
  out.probs = std::move(probs);
  out.seed = seed;
  return out;
}

PercolationParams homogeneous_params(int d, int M, double p, std::uint64_t seed) {
  return validate_params(d, M, std::vector<double>(checked_alphabet_size(d, M), p), seed);
}

PercolationParams params_from_rows(int M, const std::vector<std::vector<double>>& rows,
                                   std::uint64_t seed) {
  if (static_cast<int>(rows.size()) != M) throw ConfigError("probs matrix must have M rows");
  std::vector<double> flat(static_cast<std::size_t>(M) * M, 0.0);
  for (int j = 0; j < M; ++j) {
    if (static_cast<int>(rows[j].size()) != M)
      throw ConfigError("probs matrix row has wrong length");
    for (int i = 0; i < M; ++i) flat[static_cast<std::size_t>(j) * M + i] = rows[j][i];
  }
  return validate_params(2, M, std::move(flat), seed);
}

std::size_t letter_index(const PercolationParams& params, int i, int j) {
  return static_cast<std::size_t>(j) * params.M + i;
}

PercolationParams transpose_xy(const PercolationParams& params) {
  if (params.d != 2) throw ConfigError("transpose_xy requires d = 2");
  PercolationParams out = params;
  const int M = params.M;
  for (int j = 0; j < M; ++j)
    for (int i = 0; i < M; ++i)
      out.probs[static_cast<std::size_t>(j) * M + i] =
          params.probs[static_cast<std::size_t>(i) * M + j];
  return out;
}

PercolationParams mirror_x(const PercolationParams& params) {
  if (params.d != 2) throw ConfigError("mirror_x requires d = 2");
  PercolationParams out = params;
  const int M = params.M;
  for (int j = 0; j < M; ++j)
    for (int i = 0; i < M; ++i)
      out.probs[static_cast<std::size_t>(j) * M + i] =
          params.probs[static_cast<std::size_t>(j) * M + (M - 1 - i)];
  return out;
}

}  // namespace fracperc
