#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mgcolor/multigraph.hpp"

namespace mgcolor {

struct HamiltonOptions {
  std::uint64_t seed = 1;
  // Exhaustive backtracking is attempted up to this many vertices.
  int exhaustive_cap = 20;
  std::int64_t node_budget = 5'000'000;
  int restarts = 24;
};

enum class HamiltonStatus { kFound, kNone, kTimeout };

const char* to_string(HamiltonStatus s);

struct HamiltonResult {
  HamiltonStatus status = HamiltonStatus::kTimeout;
  // Cyclic vertex order, empty unless found.
  std::vector<int> order;
  // The cycle as a layer with multiplicity 1 per bundle.
  Multigraph cycle;

  bool found() const { return status == HamiltonStatus::kFound; }
  // One copy (index 0) per cycle edge, in cycle order.
  std::vector<EdgeCopy> edges() const;
};

// Spanning cycle of the underlying simple graph. Tries the closure
// construction, then rotation-extension, then exhaustive search for small n.
// kNone only after a completed exhaustive search or an obvious obstruction.
// Requires n >= 3 ("too-small").
HamiltonResult hamilton_cycle(const Multigraph& g, const HamiltonOptions& options = {});
// Same on the subgraph induced by `vertices` (ids are kept).
HamiltonResult hamilton_cycle_on(const Multigraph& g, std::span<const int> vertices,
                                 const HamiltonOptions& options = {});

// Throws a construction error "hamilton-failed" tagged with `stage`.
Multigraph require_hamilton_cycle(const Multigraph& g, const std::string& stage,
                                  const HamiltonOptions& options = {});

// delta >= n/2 on the underlying simple graph.
bool dirac_condition(const Multigraph& g);
// d_i <= i < n/2 implies d_{n-i} >= n - i, on the underlying simple graph.
bool chvatal_condition(const Multigraph& g);

// Perfect matching of G - avoid, from alternate edges of a Hamilton cycle of
// G - avoid. Odd remaining order is "odd-count"; failure is "no-matching-found".
Multigraph perfect_matching_avoiding(const Multigraph& g, std::span<const int> avoid,
                                     const HamiltonOptions& options = {});

}  // namespace mgcolor
