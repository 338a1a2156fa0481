#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace mgcolor {

// Engine output is fixed by the standard; the helpers below avoid the
// library-specific distributions so that a seed means the same thing everywhere.
using Rng = std::mt19937_64;

inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  return n == 0 ? 0 : rng() % n;
}

template <typename T>
void shuffle(std::vector<T>& items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[uniform_below(rng, i)]);
  }
}

}  // namespace mgcolor
