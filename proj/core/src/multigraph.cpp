#include "mgcolor/multigraph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "mgcolor/error.hpp"

namespace mgcolor {

namespace {

constexpr int kMaxMultiplicity = std::numeric_limits<int>::max() / 4;

void CheckVertex(int n, int v) {
  if (v < 0 || v >= n) {
    throw PreconditionError("bad-vertex", "vertex " + std::to_string(v) +
                                              " outside 0.." +
                                              std::to_string(n - 1));
  }
}

}  // namespace

Multigraph::Multigraph(int n) : n_(n) {
  if (n < 0) throw PreconditionError("bad-order", "negative vertex count");
  mult_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2, 0);
  degree_.assign(static_cast<std::size_t>(n), 0);
}

std::size_t Multigraph::Index(int u, int v) const {
  if (u > v) std::swap(u, v);
  const auto uu = static_cast<std::size_t>(u);
  const auto nn = static_cast<std::size_t>(n_);
  return uu * (2 * nn - uu - 1) / 2 + static_cast<std::size_t>(v - u - 1);
}

int Multigraph::mult(int u, int v) const {
  if (u == v) return 0;
  return mult_[Index(u, v)];
}

void Multigraph::set_mult(int u, int v, int m) {
  CheckVertex(n_, u);
  CheckVertex(n_, v);
  if (u == v) {
    if (m != 0) throw PreconditionError("loop", "loops are not allowed");
    return;
  }
  if (m < 0 || m > kMaxMultiplicity) {
    throw PreconditionError("bad-multiplicity",
                            "multiplicity " + std::to_string(m) + " out of range");
  }
  int& slot = mult_[Index(u, v)];
  const int delta = m - slot;
  slot = m;
  degree_[static_cast<std::size_t>(u)] += delta;
  degree_[static_cast<std::size_t>(v)] += delta;
  edges_ += delta;
}

void Multigraph::add(int u, int v, int delta) {
  CheckVertex(n_, u);
  CheckVertex(n_, v);
  if (u == v) throw PreconditionError("loop", "loops are not allowed");
  const long long next = static_cast<long long>(mult(u, v)) + delta;
  if (next < 0 || next > kMaxMultiplicity) {
    throw PreconditionError("bad-multiplicity",
                            "bundle " + std::to_string(u) + "-" + std::to_string(v) +
                                " would leave the range [0, max]");
  }
  set_mult(u, v, static_cast<int>(next));
}

int Multigraph::max_degree() const {
  return degree_.empty() ? 0 : *std::max_element(degree_.begin(), degree_.end());
}

int Multigraph::min_degree() const {
  return degree_.empty() ? 0 : *std::min_element(degree_.begin(), degree_.end());
}

int Multigraph::max_multiplicity() const {
  return mult_.empty() ? 0 : *std::max_element(mult_.begin(), mult_.end());
}

bool Multigraph::is_regular() const {
  return std::all_of(degree_.begin(), degree_.end(),
                     [&](int d) { return d == degree_.front(); });
}

std::vector<int> Multigraph::neighbors(int v) const {
  std::vector<int> out;
  for (int u = 0; u < n_; ++u) {
    if (u != v && mult(u, v) > 0) out.push_back(u);
  }
  return out;
}

std::vector<Bundle> Multigraph::bundles() const {
  std::vector<Bundle> out;
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (const int m = mult(u, v); m > 0) out.push_back({u, v, m});
    }
  }
  return out;
}

DegreeProfile degree_profile(const Multigraph& g) {
  DegreeProfile p;
  p.min_degree = g.min_degree();
  p.max_degree = g.max_degree();
  p.max_multiplicity = g.max_multiplicity();
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == p.max_degree) p.max_degree_vertices.push_back(v);
    if (g.degree(v) == p.min_degree) p.min_degree_vertices.push_back(v);
  }
  return p;
}

Multigraph doubled(const Multigraph& g) {
  Multigraph out(g.order());
  for (const Bundle& b : g.bundles()) out.set_mult(b.u, b.v, 2 * b.mult);
  return out;
}

Multigraph halved(const Multigraph& g) {
  Multigraph out(g.order());
  for (const Bundle& b : g.bundles()) {
    if (b.mult % 2 != 0) {
      throw PreconditionError("odd-bundle", "cannot halve an odd bundle");
    }
    out.set_mult(b.u, b.v, b.mult / 2);
  }
  return out;
}

Multigraph remove_layer(const Multigraph& g, const Multigraph& layer) {
  if (layer.order() != g.order()) {
    throw PreconditionError("not-a-subgraph", "layer has a different vertex set");
  }
  Multigraph out = g;
  for (const Bundle& b : layer.bundles()) {
    if (b.mult > g.mult(b.u, b.v)) {
      throw PreconditionError("not-a-subgraph",
                              "layer bundle " + std::to_string(b.u) + "-" +
                                  std::to_string(b.v) + " exceeds the graph");
    }
    out.add(b.u, b.v, -b.mult);
  }
  return out;
}

Multigraph combined(const Multigraph& a, const Multigraph& b) {
  if (a.order() != b.order()) {
    throw PreconditionError("order-mismatch", "graphs have different vertex sets");
  }
  Multigraph out = a;
  for (const Bundle& e : b.bundles()) out.add(e.u, e.v, e.mult);
  return out;
}

Multigraph underlying_simple(const Multigraph& g) {
  Multigraph out(g.order());
  for (const Bundle& b : g.bundles()) out.set_mult(b.u, b.v, 1);
  return out;
}

bool is_subgraph(const Multigraph& sub, const Multigraph& g) {
  if (sub.order() != g.order()) return false;
  for (const Bundle& b : sub.bundles()) {
    if (b.mult > g.mult(b.u, b.v)) return false;
  }
  return true;
}

Multigraph with_extra_vertices(const Multigraph& g, int extra) {
  Multigraph out(g.order() + extra);
  for (const Bundle& b : g.bundles()) out.set_mult(b.u, b.v, b.mult);
  return out;
}

Multigraph restrict_to_prefix(const Multigraph& g, int n) {
  Multigraph out(n);
  for (const Bundle& b : g.bundles()) {
    if (b.v < n) out.set_mult(b.u, b.v, b.mult);
  }
  return out;
}

Multigraph without_vertices(const Multigraph& g, std::span<const int> vertices) {
  Multigraph out = g;
  for (int x : vertices) {
    for (int u = 0; u < g.order(); ++u) {
      if (u != x) out.set_mult(u, x, 0);
    }
  }
  return out;
}

std::int64_t edges_within(const Multigraph& g, std::span<const int> vertices) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      total += g.mult(vertices[i], vertices[j]);
    }
  }
  return total;
}

bool is_matching(const Multigraph& g) { return g.max_degree() <= 1; }

bool is_perfect_matching(const Multigraph& g) {
  return std::all_of(g.degrees().begin(), g.degrees().end(),
                     [](int d) { return d == 1; });
}

bool is_connected(const Multigraph& g) {
  const int n = g.order();
  if (n <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int u = 0; u < n; ++u) {
      if (!seen[static_cast<std::size_t>(u)] && g.mult(u, v) > 0) {
        seen[static_cast<std::size_t>(u)] = 1;
        ++count;
        stack.push_back(u);
      }
    }
  }
  return count == n;
}

int nontrivial_components(const Multigraph& g) {
  const int n = g.order();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  int components = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)] || g.degree(s) == 0) continue;
    ++components;
    std::vector<int> stack{s};
    seen[static_cast<std::size_t>(s)] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int u = 0; u < n; ++u) {
        if (!seen[static_cast<std::size_t>(u)] && g.mult(u, v) > 0) {
          seen[static_cast<std::size_t>(u)] = 1;
          stack.push_back(u);
        }
      }
    }
  }
  return components;
}

bool is_hamilton_cycle(const Multigraph& g) {
  if (g.order() < 3) return false;
  if (g.max_multiplicity() != 1) return false;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 2) return false;
  }
  return is_connected(g);
}

}  // namespace mgcolor
