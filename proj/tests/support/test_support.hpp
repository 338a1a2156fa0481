#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mgcolor/multigraph.hpp"
#include "mgcolor/rational.hpp"

namespace mgtest {

using mgcolor::Multigraph;

inline Multigraph complete(int n, int r = 1) {
  Multigraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.set_mult(u, v, r);
  }
  return g;
}

inline Multigraph cycle(int n, int r = 1) {
  Multigraph g(n);
  for (int i = 0; i < n; ++i) g.add(i, (i + 1) % n, r);
  return g;
}

inline Multigraph path(int n) {
  Multigraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add(i, i + 1);
  return g;
}

// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram.
inline Multigraph petersen_by_hand(int r = 1) {
  Multigraph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add(i, (i + 1) % 5, r);
    g.add(i, i + 5, r);
    g.add(5 + i, 5 + (i + 2) % 5, r);
  }
  return g;
}

inline Multigraph random_multigraph(int n, int mu, double p, std::mt19937_64& rng) {
  Multigraph g(n);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng) < p) g.set_mult(u, v, 1 + static_cast<int>(rng() % static_cast<unsigned>(mu)));
    }
  }
  return g;
}

// Straightforward odd-subset maximum, recomputing e(X) from scratch.
struct BruteDensity {
  mgcolor::Rational omega{0};
  std::vector<int> witness;
};

inline BruteDensity brute_density(const Multigraph& g) {
  BruteDensity best;
  const int n = g.order();
  bool have = false;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    std::vector<int> xs;
    for (int v = 0; v < n; ++v) {
      if (mask & (1U << v)) xs.push_back(v);
    }
    if (xs.size() < 3 || xs.size() % 2 == 0) continue;
    std::int64_t e = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t j = i + 1; j < xs.size(); ++j) e += g.mult(xs[i], xs[j]);
    }
    const mgcolor::Rational r(e, static_cast<std::int64_t>(xs.size() - 1) / 2);
    if (!have || r > best.omega || (r == best.omega && xs < best.witness)) {
      have = true;
      best.omega = r;
      best.witness = xs;
    }
  }
  return best;
}

}  // namespace mgtest
