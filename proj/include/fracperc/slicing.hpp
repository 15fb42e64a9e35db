// Lines and slices. The line through offset x in direction alpha meets the
// level-n cell with corner (a, b) iff x lies in the cell's projected interval.
// Two tie rules are used:
//   * slice_cells on sampled level sets treats cells as closed, so a line
//     touching a cell boundary hits it;
//   * the deterministic pattern counters count positive-length crossings
//     (open intervals), so a line through a lattice corner does not pick up
//     the cells it merely touches.
// Exact queries clear all denominators and decide membership in integer
// arithmetic; widths beyond 63 bits fall back to 128-bit and then arbitrary
// precision integers.
#pragma once

#include <cstdint>
#include <vector>

#include "fracperc/cell.hpp"
#include "fracperc/direction.hpp"
#include "fracperc/grid_function.hpp"
#include "fracperc/level_set.hpp"
#include "fracperc/params.hpp"
#include "fracperc/stats.hpp"

namespace fracperc {

// A subset of the d = 2 alphabet with one common retention probability.
struct Pattern {
  int M = 3;
  std::vector<std::uint8_t> mask;  // M*M entries, index j*M + i
  double p = 1.0;

  int count() const;
  bool has(int i, int j) const { return mask[static_cast<std::size_t>(j) * M + i] != 0; }
  PercolationParams params(std::uint64_t seed) const;

  static Pattern full(int M, double p);
  static Pattern sierpinski(double p);      // M = 3, center cell removed
  static Pattern cantor_columns(double p);  // M = 3, middle column removed
  static Pattern cantor_rows(double p);     // M = 3, middle row removed
  static Pattern from_params(const PercolationParams& params);
};

struct SliceQuery {
  Direction dir;
  bool exact = false;
  Rational x_q;   // valid when exact
  double x = 0.0;

  static SliceQuery exact_query(Rational beta, Rational x);
  static SliceQuery approx_query(double beta, double x);
};

// Retained cells of the level set whose closed projected interval contains x.
std::vector<CellWord> slice_cells(const LevelSet& set, const SliceQuery& q);

// Exact count of deterministic level-n pattern cells crossed by the line.
// Depth-first with pruning; cost is proportional to the number of cells met,
// not to M^(2n).
std::uint64_t pattern_slice_count(const Pattern& pattern, const SliceQuery& q, int n);

// Counts for every level 0..n_hi from one pruned walk.
std::vector<std::uint64_t> pattern_slice_counts(const Pattern& pattern, const SliceQuery& q,
                                                int n_hi);

struct SliceDimension {
  DimensionFit fit;
  std::vector<std::uint64_t> counts;  // per level n_lo..n_hi
  int n_lo = 1;
  int n_hi = 2;
};

// Least-squares slope of log N against n log M over [n_lo, n_hi].
SliceDimension slice_box_dimension(const Pattern& pattern, const Direction& dir, Rational x,
                                   int n_lo, int n_hi);

enum class EntranceSide { South, West };

struct Entrance {
  EntranceSide side = EntranceSide::South;
  double point = 0.0;  // psi value in [-beta, 1]
};

// Relative entrance point psi(x) = M^n x - a + b*beta of the line into the
// cell; South iff psi in [0, 1], West iff psi in [-beta, 0).
Entrance classify_entrance(const CellWord& word, const SliceQuery& q);

// Entrance points of all level-n pattern cells crossed by the line.
struct SliceEntrances {
  std::vector<double> southern;       // psi values in [0, 1]
  std::vector<std::int64_t> southern_rows;
  std::vector<double> western;        // psi values in [-beta, 0)
};

SliceEntrances slice_entrances(const Pattern& pattern, const SliceQuery& q, int n);

struct ErgodicSumResult {
  double average = 0.0;
  std::size_t terms = 0;
};

// Mean of h over the southern entrance points of the level-n slice cells.
// h must integrate to ~0 over its domain.
ErgodicSumResult partial_ergodic_sum(const GridFunction& h, const SliceQuery& q, int n,
                                     const Pattern& pattern);

}  // namespace fracperc
