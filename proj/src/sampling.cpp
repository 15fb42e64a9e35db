#include "fracperc/sampling.hpp"

#include <algorithm>
#include <string>

#include "fracperc/branching.hpp"
#include "fracperc/errors.hpp"
#include "fracperc/rng.hpp"

namespace fracperc {

namespace {

struct Frontier {
  std::vector<std::uint32_t> coords;  // d per cell
  std::vector<std::uint64_t> hashes;  // chain hash per cell
};

}  // namespace

LevelSet sample_level_set(const PercolationParams& params, int n, const SampleLimits& limits) {
  if (n < 0) throw ConfigError("level n must be >= 0");
  const int d = params.d;
  const int M = params.M;
  const std::size_t nd = static_cast<std::size_t>(d);
  const std::size_t alphabet = params.alphabet_size();

  // Coordinates are stored in 32 bits per axis.
  {
    double side = 1.0;
    for (int k = 0; k < n; ++k) side *= M;
    if (side > 4294967295.0) throw ResourceCapError("level too deep: grid side exceeds 2^32");
  }

  Frontier cur;
  cur.coords.assign(nd, 0);
  cur.hashes.assign(1, chain_root(params.seed));

  std::vector<std::uint32_t> child(nd, 0);
  for (int level = 0; level < n; ++level) {
    Frontier next;
    next.coords.reserve(cur.coords.size() * 2);
    next.hashes.reserve(cur.hashes.size() * 2);
    for (std::size_t c = 0; c < cur.hashes.size(); ++c) {
      const std::uint32_t* base = cur.coords.data() + c * nd;
      for (std::size_t letter = 0; letter < alphabet; ++letter) {
        const std::uint64_t h = chain_extend(cur.hashes[c], static_cast<std::uint32_t>(letter));
        if (unit_from_bits(h) >= params.probs[letter]) continue;
        std::size_t rem = letter;
        for (std::size_t k = 0; k < nd; ++k) {
          child[k] = base[k] * static_cast<std::uint32_t>(M) +
                     static_cast<std::uint32_t>(rem % static_cast<std::size_t>(M));
          rem /= static_cast<std::size_t>(M);
        }
        next.coords.insert(next.coords.end(), child.begin(), child.end());
        next.hashes.push_back(h);
        if (next.hashes.size() > limits.max_cells)
          throw ResourceCapError("level too deep: cell count cap " +
                                 std::to_string(limits.max_cells) + " exceeded");
      }
    }
    cur = std::move(next);
    if (cur.hashes.empty()) break;  // extinct; deeper levels stay empty
  }

  LevelSet out;
  out.d = d;
  out.M = M;
  out.n = n;
  out.params_digest = params.digest();
  out.coords = std::move(cur.coords);
  out.sort_cells();
  return out;
}

ConditionedSample sample_conditioned(const PercolationParams& params, int n, int max_attempts,
                                     const SampleLimits& limits) {
  if (!params.supercritical())
    throw ConfigError("conditioning on non-extinction requires sum of probabilities > 1");
  if (max_attempts < 1) throw ConfigError("max_attempts must be >= 1");
  PercolationParams attempt = params;
  for (int k = 0; k < max_attempts; ++k) {
    attempt.seed = replicate_seed(params.seed, static_cast<std::uint64_t>(k));
    LevelSet set = sample_level_set(attempt, n, limits);
    if (set.count() > 0) return {std::move(set), k + 1};
  }
  throw ConditioningError(
      "extinction-dominated: no nonempty realization in " + std::to_string(max_attempts) +
          " attempts",
      extinction_probability(params), max_attempts);
}

LevelSet intersect_level_sets(const LevelSet& a, const LevelSet& b) {
  if (a.n != b.n) throw ConfigError("level mismatch in intersection");
  if (a.d != b.d || a.M != b.M) throw ConfigError("geometry mismatch in intersection");
  LevelSet out;
  out.d = a.d;
  out.M = a.M;
  out.n = a.n;
  out.params_digest = mix64(a.params_digest ^ b.params_digest);
  std::size_t i = 0, j = 0;
  while (i < a.count() && j < b.count()) {
    auto ca = a.cell(i);
    auto cb = b.cell(j);
    if (std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end())) {
      ++i;
    } else if (std::lexicographical_compare(cb.begin(), cb.end(), ca.begin(), ca.end())) {
      ++j;
    } else {
      out.coords.insert(out.coords.end(), ca.begin(), ca.end());
      ++i;
      ++j;
    }
  }
  return out;
}

Bitmap raster(const LevelSet& set) {
  if (set.d != 2) throw ConfigError("raster requires d = 2");
  std::int64_t side = 1;
  for (int k = 0; k < set.n; ++k) {
    side *= set.M;
    if (side > (std::int64_t(1) << 20)) throw ResourceCapError("raster side exceeds 2^20");
  }
  if (side * side > (std::int64_t(1) << 34)) throw ResourceCapError("raster too large");
  Bitmap bm;
  bm.side = side;
  bm.bits.assign(static_cast<std::size_t>(side) * static_cast<std::size_t>(side), 0);
  for (std::size_t c = 0; c < set.count(); ++c) {
    auto cell = set.cell(c);
    bm.bits[static_cast<std::size_t>(cell[1]) * static_cast<std::size_t>(side) + cell[0]] = 1;
  }
  return bm;
}

}  // namespace fracperc
