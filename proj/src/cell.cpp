#include "fracperc/cell.hpp"

#include "fracperc/errors.hpp"

namespace fracperc {

std::uint32_t CellWord::component(std::uint32_t letter, int k) const {
  std::uint32_t v = letter;
  for (int t = 0; t < k; ++t) v /= static_cast<std::uint32_t>(M);
  return v % static_cast<std::uint32_t>(M);
}

std::vector<std::uint64_t> CellWord::corner() const {
  std::vector<std::uint64_t> c(static_cast<std::size_t>(d), 0);
  for (std::uint32_t letter : letters) {
    for (int k = 0; k < d; ++k) c[k] = c[k] * static_cast<std::uint64_t>(M) + component(letter, k);
  }
  return c;
}

CellWord CellWord::from_corner(int d, int M, int n, std::span<const std::uint64_t> corner) {
  if (static_cast<int>(corner.size()) != d) throw ConfigError("corner has wrong dimension");
  CellWord w;
  w.d = d;
  w.M = M;
  w.letters.assign(static_cast<std::size_t>(n), 0);
  std::vector<std::uint64_t> c(corner.begin(), corner.end());
  for (int pos = n - 1; pos >= 0; --pos) {
    std::uint32_t letter = 0;
    std::uint32_t scale = 1;
    for (int k = 0; k < d; ++k) {
      letter += scale * static_cast<std::uint32_t>(c[k] % M);
      c[k] /= static_cast<std::uint64_t>(M);
      scale *= static_cast<std::uint32_t>(M);
    }
    w.letters[static_cast<std::size_t>(pos)] = letter;
  }
  for (std::uint64_t rem : c)
    if (rem != 0) throw ConfigError("corner coordinate out of range for level");
  return w;
}

}  // namespace fracperc
