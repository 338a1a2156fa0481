#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "mgcolor/coloring.hpp"
#include "mgcolor/multigraph.hpp"

namespace mgcolor {

// Totality, colour range and distinct colours at every vertex. Returns the
// first violation, naming the vertex and edge copies involved.
std::optional<std::string> verify_coloring(const Multigraph& g, const EdgeColoring& c);

struct OracleOptions {
  int edge_cap = 40;
  std::int64_t node_budget = 200'000'000;
};

struct OracleResult {
  int chi = 0;
  EdgeColoring coloring;
  // Lower bound the search started from: max(Delta, ceil(chi_f)).
  int lower_bound = 0;
  std::int64_t nodes = 0;
};

// Exact chromatic index by exhaustive search, starting at
// max(Delta, ceil(chi_f)) and going up. Errors: "cap-exceeded" above the edge
// cap, "oracle-budget" if the node budget runs out.
OracleResult brute_force_chi(const Multigraph& g, const OracleOptions& options = {});

}  // namespace mgcolor
