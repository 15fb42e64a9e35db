#include "fracperc/interval.hpp"

#include <algorithm>

#include "fracperc/errors.hpp"

namespace fracperc {

IntervalUnion IntervalUnion::from_intervals(std::vector<Interval> parts) {
  std::erase_if(parts, [](const Interval& iv) { return iv.hi < iv.lo; });
  std::sort(parts.begin(), parts.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi); });
  IntervalUnion u;
  for (const Interval& iv : parts) {
    if (!u.parts_.empty() && iv.lo <= u.parts_.back().hi) {
      u.parts_.back().hi = std::max(u.parts_.back().hi, iv.hi);
    } else {
      u.parts_.push_back(iv);
    }
  }
  return u;
}

double IntervalUnion::total_length() const {
  double s = 0.0;
  for (const Interval& iv : parts_) s += iv.length();
  return s;
}

bool IntervalUnion::contains_point(double x) const {
  auto it = std::upper_bound(parts_.begin(), parts_.end(), x,
                             [](double v, const Interval& iv) { return v < iv.lo; });
  if (it == parts_.begin()) return false;
  --it;
  return x <= it->hi;
}

std::pair<double, Interval> IntervalUnion::largest_component() const {
  Interval best{0.0, 0.0};
  double len = 0.0;
  for (const Interval& iv : parts_) {
    if (iv.length() > len) {
      len = iv.length();
      best = iv;
    }
  }
  return {len, best};
}

std::pair<double, Interval> largest_interior_interval(const IntervalUnion& u) {
  return u.largest_component();
}

void ExactIntervalUnion::normalize() {
  std::sort(parts.begin(), parts.end());
  std::vector<std::pair<std::int64_t, std::int64_t>> merged;
  for (const auto& p : parts) {
    if (p.second < p.first) continue;
    if (!merged.empty() && p.first <= merged.back().second) {
      merged.back().second = std::max(merged.back().second, p.second);
    } else {
      merged.push_back(p);
    }
  }
  parts.swap(merged);
}

bool ExactIntervalUnion::contained_in(const ExactIntervalUnion& other) const {
  if (den != other.den) throw ConfigError("exact interval unions must share a denominator");
  std::size_t j = 0;
  for (const auto& p : parts) {
    while (j < other.parts.size() && other.parts[j].second < p.first) ++j;
    if (j == other.parts.size()) return false;
    if (!(other.parts[j].first <= p.first && p.second <= other.parts[j].second)) return false;
  }
  return true;
}

std::int64_t ExactIntervalUnion::largest_gap() const {
  std::int64_t gap = 0;
  for (std::size_t i = 1; i < parts.size(); ++i)
    gap = std::max(gap, parts[i].first - parts[i - 1].second);
  return gap;
}

}  // namespace fracperc
