#pragma once

#include <vector>

#include "mgcolor/multigraph.hpp"

namespace mgcolor {

// v0, e1, v1, ..., et, vt. edges[i] joins vertices[i] and vertices[i+1].
struct Trail {
  std::vector<int> vertices;
  std::vector<EdgeCopy> edges;

  bool closed() const { return !vertices.empty() && vertices.front() == vertices.back(); }
  std::size_t length() const { return edges.size(); }
};

// Consecutive incidence and distinct copies.
bool is_valid_trail(const Trail& t, const Multigraph& g);
Multigraph trail_graph(const Trail& t, int order);

struct CyclePathDecomposition {
  std::vector<Trail> cycles;
  std::vector<Trail> paths;
};

// Closed trail through every copy, starting at the lowest non-isolated vertex.
// Walks to the lowest available neighbour and uses the highest remaining copy.
// Errors: "not-even", "disconnected".
Trail euler_tour(const Multigraph& g);
// As euler_tour but starts and ends at `start`; "bad-start" if it is isolated.
Trail euler_tour_from(const Multigraph& g, int start);

// Edge-disjoint cycles and paths covering g, with one path end at each odd
// vertex and the paths forming a forest. Parallel copies give 2-cycles.
CyclePathDecomposition cycle_path_decompose(const Multigraph& g);

// Spanning forest of the non-trivial components of an even multigraph with
// d_T(v) <= 1 + d_G(v)/2 everywhere. Each tree edge is a single copy.
// Errors: "not-even"; a violated bound raises a construction error.
Multigraph bounded_spanning_forest(const Multigraph& g);

}  // namespace mgcolor
