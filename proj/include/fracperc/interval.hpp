// Unions of closed intervals on the line, kept sorted, disjoint and merged
// (touching endpoints coalesce). An exact integer-numerator variant backs the
// zero-tolerance containment checks for rational directions.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace fracperc {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const { return hi - lo; }
  bool operator==(const Interval&) const = default;
};

class IntervalUnion {
 public:
  IntervalUnion() = default;

  // Sorts, merges touching/overlapping parts.
  static IntervalUnion from_intervals(std::vector<Interval> parts);

  const std::vector<Interval>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  double total_length() const;
  bool contains_point(double x) const;

  // Longest single component and its length; zero interval for an empty union.
  std::pair<double, Interval> largest_component() const;

 private:
  std::vector<Interval> parts_;
};

// Finite-level proxy for interior of a projection: the longest component.
std::pair<double, Interval> largest_interior_interval(const IntervalUnion& u);

// Intervals with integer endpoints over a common denominator.
struct ExactIntervalUnion {
  std::int64_t den = 1;  // common positive denominator
  std::vector<std::pair<std::int64_t, std::int64_t>> parts;  // sorted, disjoint, merged

  void normalize();  // sort + merge (touching endpoints coalesce)
  bool contained_in(const ExactIntervalUnion& other) const;  // requires equal den
  std::int64_t largest_gap() const;  // longest internal gap numerator, 0 if none
};

}  // namespace fracperc
