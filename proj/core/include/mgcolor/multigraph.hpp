#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace mgcolor {

// One parallel edge of a bundle. Endpoints are stored with u < v, so (u,v,i)
// and (v,u,i) name the same copy.
struct EdgeCopy {
  int u = 0;
  int v = 0;
  int copy = 0;

  EdgeCopy() = default;
  EdgeCopy(int a, int b, int index)
      : u(a < b ? a : b), v(a < b ? b : a), copy(index) {}

  friend auto operator<=>(const EdgeCopy&, const EdgeCopy&) = default;
};

struct Bundle {
  int u = 0;
  int v = 0;
  int mult = 0;

  friend bool operator==(const Bundle&, const Bundle&) = default;
};

// Loopless multigraph on vertices 0..n-1. Multiplicities are kept once per
// unordered pair; vertex degrees are cached and updated on every change.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int n);

  int order() const noexcept { return n_; }
  int mult(int u, int v) const;
  int degree(int v) const { return degree_[static_cast<std::size_t>(v)]; }
  std::int64_t edge_count() const noexcept { return edges_; }

  void set_mult(int u, int v, int m);
  // Adds `delta` copies (may be negative); the result must stay >= 0.
  void add(int u, int v, int delta = 1);

  int max_degree() const;
  int min_degree() const;
  int max_multiplicity() const;
  bool is_regular() const;
  bool is_simple() const { return max_multiplicity() <= 1; }

  // Neighbours in ascending order.
  std::vector<int> neighbors(int v) const;
  // Non-empty bundles in lexicographic (u, v) order.
  std::vector<Bundle> bundles() const;
  const std::vector<int>& degrees() const noexcept { return degree_; }

  friend bool operator==(const Multigraph& a, const Multigraph& b) {
    return a.n_ == b.n_ && a.mult_ == b.mult_;
  }

 private:
  std::size_t Index(int u, int v) const;

  int n_ = 0;
  std::vector<int> mult_;
  std::vector<int> degree_;
  std::int64_t edges_ = 0;
};

struct DegreeProfile {
  int min_degree = 0;
  int max_degree = 0;
  int max_multiplicity = 0;
  std::vector<int> max_degree_vertices;
  std::vector<int> min_degree_vertices;
};

DegreeProfile degree_profile(const Multigraph& g);

// Every multiplicity doubled.
Multigraph doubled(const Multigraph& g);
// Inverse of doubled(); every multiplicity must be even.
Multigraph halved(const Multigraph& g);
// g minus the edge multiset `layer`; throws "not-a-subgraph" if layer is not
// contained in g.
Multigraph remove_layer(const Multigraph& g, const Multigraph& layer);
// Bundle-wise sum of two multigraphs on the same vertex set.
Multigraph combined(const Multigraph& a, const Multigraph& b);
Multigraph underlying_simple(const Multigraph& g);
bool is_subgraph(const Multigraph& sub, const Multigraph& g);

// Same graph with `extra` isolated vertices appended.
Multigraph with_extra_vertices(const Multigraph& g, int extra);
// Keeps vertices 0..n-1 and every bundle among them.
Multigraph restrict_to_prefix(const Multigraph& g, int n);
// Deletes the listed vertices (their bundles become empty); vertex ids are kept.
Multigraph without_vertices(const Multigraph& g, std::span<const int> vertices);

// e(G[X]) for a vertex set X.
std::int64_t edges_within(const Multigraph& g, std::span<const int> vertices);

// A matching as a multigraph: every vertex degree <= 1.
bool is_matching(const Multigraph& g);
bool is_perfect_matching(const Multigraph& g);
// Connected, spanning and 2-regular on the underlying simple graph, with every
// bundle of multiplicity 1.
bool is_hamilton_cycle(const Multigraph& g);
bool is_connected(const Multigraph& g);
// Number of connected components that contain at least one edge.
int nontrivial_components(const Multigraph& g);

}  // namespace mgcolor
