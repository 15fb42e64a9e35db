// Construction parameters: ambient dimension d, subdivision count M, one
// retention probability per symbol of the alphabet {0..M-1}^d, and the seed.
//
// A symbol (i_1, ..., i_d) is stored at flat index sum_k i_k * M^(k-1); for
// d = 2 the letter (i, j) means column i, row j, so the flat order is
// row-major with the bottom row first.
#pragma once

#include <cstdint>
#include <vector>

namespace fracperc {

struct PercolationParams {
  int d = 2;
  int M = 2;
  std::vector<double> probs;  // M^d entries in [0, 1]
  std::uint64_t seed = 0;

  std::size_t alphabet_size() const { return probs.size(); }
  double prob(std::size_t letter) const { return probs[letter]; }

  double sum_probs() const;
  bool supercritical() const { return sum_probs() > 1.0; }   // survival possible
  bool dim_gt_1() const { return sum_probs() > double(M); }  // expected dimension > 1
  bool homogeneous() const;

  // Fingerprint of (d, M, probs, seed); stored in sampled level sets.
  std::uint64_t digest() const;
};

// Validates ranges and table size; throws ConfigError on violation.
PercolationParams validate_params(int d, int M, std::vector<double> probs, std::uint64_t seed);

PercolationParams homogeneous_params(int d, int M, double p, std::uint64_t seed);

// d = 2 table from rows, bottom row first: rows[j][i] = p at column i, row j.
PercolationParams params_from_rows(int M, const std::vector<std::vector<double>>& rows,
                                   std::uint64_t seed);

// Dihedral symmetries of the square acting on the probability table (d = 2).
PercolationParams transpose_xy(const PercolationParams& params);  // (i,j) -> (j,i)
PercolationParams mirror_x(const PercolationParams& params);      // i -> M-1-i

std::size_t letter_index(const PercolationParams& params, int i, int j);

}  // namespace fracperc
