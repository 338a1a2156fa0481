#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mgcolor/coloring.hpp"
#include "mgcolor/multigraph.hpp"

namespace mgcolor {

// Per-vertex capacity f and per-bundle capacity g of one colour class.
struct FGSpec {
  std::vector<int> f;
  int g_default = 1;
  std::map<std::pair<int, int>, int> g_override;

  static FGSpec uniform(int order, int f, int g);
  int g(int u, int v) const;
  void set_g(int u, int v, int value);
};

// max(max_v ceil(d(v)/f(v)), max_uv ceil(mult(u,v)/g(uv))).
int fg_bound(const Multigraph& g, const FGSpec& spec);

// First violation of the fg-colouring rules, or nullopt.
std::optional<std::string> check_fg_coloring(const Multigraph& g, const FGSpec& spec,
                                             const std::vector<Multigraph>& classes);

struct Bipartition {
  std::vector<int> side;  // 0 or 1 per vertex
};

// Colour classes of an fg-colouring of a bipartite multigraph, using
// `colors` classes (default: fg_bound). Errors: "not-bipartite", "bad-spec",
// "too-few-colors".
std::vector<Multigraph> fg_classes_bipartite(const Multigraph& h, const FGSpec& spec,
                                             const Bipartition& parts,
                                             std::optional<int> colors = std::nullopt);
EdgeColoring fg_color_bipartite(const Multigraph& h, const FGSpec& spec,
                                const Bipartition& parts);

// General multigraph with every f and g even ("parity" otherwise).
std::vector<Multigraph> fg_classes_even(const Multigraph& g, const FGSpec& spec,
                                        std::optional<int> colors = std::nullopt);
EdgeColoring fg_color_even(const Multigraph& g, const FGSpec& spec);

// Arc counts of an orientation of doubled(G).
struct Orientation {
  int order = 0;
  std::vector<int> arcs;  // row-major order x order
  // Arcs that came from singleton edges of G and form 2-cycles with their
  // duplicates, as an undirected simple graph.
  Multigraph singleton_pairs;

  explicit Orientation(int n = 0)
      : order(n), arcs(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0),
        singleton_pairs(n) {}

  int arc(int u, int v) const {
    return arcs[static_cast<std::size_t>(u) * static_cast<std::size_t>(order) + static_cast<std::size_t>(v)];
  }
  void add_arc(int u, int v, int count = 1) {
    arcs[static_cast<std::size_t>(u) * static_cast<std::size_t>(order) + static_cast<std::size_t>(v)] += count;
  }
  int out_degree(int v) const;
  int in_degree(int v) const;
  Multigraph underlying() const;
};

// Orientation of doubled(G): every copy of a bundle of multiplicity >= 2 is
// paired with its duplicate in opposite directions; the singleton edges are
// split into cycles and paths, cycle edges going around with their duplicates
// and path edges against them.
Orientation orient_doubled(const Multigraph& g);

// Balanced at every vertex, at most max_arcs arcs u->v, singleton 2-cycles
// form a forest.
std::optional<std::string> check_orientation(const Orientation& d, const Multigraph& source,
                                             int max_arcs);

// v+ is v and v- is v + n; arc u->v becomes the edge u+ v-.
struct DoubleCover {
  Multigraph graph;
  Bipartition parts;
};

DoubleCover double_cover(const Orientation& d);
// Identifies v+ and v- again.
Multigraph collapse_cover(const Multigraph& cover_class, int order);

}  // namespace mgcolor
