// Projections of cells and level sets onto the x-axis along lines of angle
// alpha: (x, y) -> x - y*beta with beta = cot(alpha). A level-n cell with
// corner (a, b) projects to [(a - (b+1)*beta) / M^n, (a+1 - b*beta) / M^n].
#pragma once

#include "fracperc/cell.hpp"
#include "fracperc/direction.hpp"
#include "fracperc/interval.hpp"
#include "fracperc/level_set.hpp"

namespace fracperc {

Interval project_corner(int M, int n, std::uint64_t a, std::uint64_t b, double beta);

Interval project_cell(const CellWord& word, const Direction& dir);

// Merged union of the projected cells; total length <= 1 + beta.
IntervalUnion project_level_set(const LevelSet& set, const Direction& dir);

// Exact endpoints (a*den - (b+1)*num, (a+1)*den - b*num) over the common
// denominator M^n * den for a rational beta = num/den.
ExactIntervalUnion project_level_set_exact(const LevelSet& set, Rational beta);

// The exact projection of the full deterministic pattern carpet at level n
// for d = 2: every cell whose letters all lie in the pattern mask.
ExactIntervalUnion project_pattern_exact(int M, const std::vector<std::uint8_t>& mask, int n,
                                         Rational beta);

}  // namespace fracperc
