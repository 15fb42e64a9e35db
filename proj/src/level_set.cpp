#include "fracperc/level_set.hpp"

#include <algorithm>
#include <cstring>

#include "fracperc/errors.hpp"

namespace fracperc {

namespace {

// Sorts cells of width d by lexicographic coordinate order.
void sort_tuples(std::vector<std::uint32_t>& coords, int d) {
  const std::size_t nd = static_cast<std::size_t>(d);
  const std::size_t count = coords.size() / nd;
  std::vector<std::size_t> order(count);
  for (std::size_t i = 0; i < count; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(coords.begin() + a * nd, coords.begin() + (a + 1) * nd,
                                        coords.begin() + b * nd, coords.begin() + (b + 1) * nd);
  });
  std::vector<std::uint32_t> out(coords.size());
  for (std::size_t i = 0; i < count; ++i)
    std::memcpy(out.data() + i * nd, coords.data() + order[i] * nd, nd * sizeof(std::uint32_t));
  coords.swap(out);
}

void dedup_tuples(std::vector<std::uint32_t>& coords, int d) {
  const std::size_t nd = static_cast<std::size_t>(d);
  const std::size_t count = coords.size() / nd;
  std::size_t out = 0;
  for (std::size_t i = 0; i < count; ++i) {
    if (out > 0 && std::equal(coords.begin() + i * nd, coords.begin() + (i + 1) * nd,
                              coords.begin() + (out - 1) * nd)) {
      continue;
    }
    if (out != i)
      std::memmove(coords.data() + out * nd, coords.data() + i * nd, nd * sizeof(std::uint32_t));
    ++out;
  }
  coords.resize(out * nd);
}

}  // namespace

void LevelSet::sort_cells() { sort_tuples(coords, d); }

CellWord LevelSet::word(std::size_t idx) const {
  auto c = cell(idx);
  std::vector<std::uint64_t> corner(c.begin(), c.end());
  return CellWord::from_corner(d, M, n, corner);
}

bool LevelSet::contains(std::span<const std::uint32_t> needle) const {
  const std::size_t nd = static_cast<std::size_t>(d);
  std::size_t lo = 0, hi = count();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    auto c = cell(mid);
    if (std::lexicographical_compare(c.begin(), c.end(), needle.begin(), needle.end()))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo == count()) return false;
  auto c = cell(lo);
  return std::equal(c.begin(), c.end(), needle.begin(), needle.end()) && nd > 0;
}

LevelSet LevelSet::prefix_set(int k) const {
  if (k < 0 || k > n) throw ConfigError("prefix level out of range");
  LevelSet out;
  out.d = d;
  out.M = M;
  out.n = k;
  out.params_digest = params_digest;
  std::uint64_t div = 1;
  for (int t = 0; t < n - k; ++t) div *= static_cast<std::uint64_t>(M);
  out.coords.resize(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i)
    out.coords[i] = static_cast<std::uint32_t>(coords[i] / div);
  sort_tuples(out.coords, d);
  dedup_tuples(out.coords, d);
  return out;
}

LevelSet transpose_xy(const LevelSet& set) {
  if (set.d != 2) throw ConfigError("transpose_xy requires d = 2");
  LevelSet out = set;
  for (std::size_t i = 0; i + 1 < out.coords.size(); i += 2)
    std::swap(out.coords[i], out.coords[i + 1]);
  out.sort_cells();
  return out;
}

}  // namespace fracperc
