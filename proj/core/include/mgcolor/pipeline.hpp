#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mgcolor/coloring.hpp"
#include "mgcolor/edge_coloring_search.hpp"
#include "mgcolor/factorization.hpp"
#include "mgcolor/multigraph.hpp"
#include "mgcolor/oracle.hpp"
#include "mgcolor/rational.hpp"
#include "mgcolor/trace.hpp"

namespace mgcolor {

struct PipelineConfig {
  Rational epsilon{1, 2};
  bool desk_scale = false;
  std::uint64_t seed = 1;
  int enumeration_cap = 16;
  int hamilton_exhaustive_cap = 20;
  OracleOptions oracle;
  SearchOptions search;
  ExactOptions exact{5'000'000};

  RegimeConstants constants() const { return RegimeConstants{desk_scale}; }
  FactorOptions factor_options(PipelineTrace* trace = nullptr) const;
};

struct ColoringResult {
  EdgeColoring coloring;
  PipelineTrace trace;
};

// Overfull or full G: a ceil(chi_f)-colouring from partial and perfect
// matchings that leave a delta-regular graph, which is 1-factorised. Regular
// G, and G with 2 e(G - v) = Delta (n-2) for a minimum-degree v even when
// Delta(G - v) < Delta, are accepted too.
// Errors: "odd-order", "not-overfull", "below-bound"; construction errors
// such as "terminal-not-regular" name their stage.
ColoringResult color_overfull_case(const Multigraph& g, const PipelineConfig& config = {});

// G with e(G - v*) = Delta (n-2)/2 - s, 0 <= s <= deficiency_limit(r), v* of
// minimum degree.
// Errors: "not-minimum", "deficiency-out-of-range", "below-bound".
ColoringResult color_small_deficiency(const Multigraph& g, int v_star,
                                      const PipelineConfig& config = {});

struct SaturationResult {
  Multigraph graph;
  std::vector<std::pair<int, int>> added;  // in insertion order
  bool hit_full = false;
};

// Joins sub-Delta vertices below multiplicity mu(G), lexicographically with a
// rescan after every edge, until 2 e(G' - x) = Delta (n-2) for some x or nothing
// is left.
SaturationResult saturate_deficient(const Multigraph& g);

// Delta-colouring of a dense G with no Delta-overfull subgraph.
// Errors: "odd-order", "bad-epsilon", "overfull-present", "below-bound".
ColoringResult color_dense_no_overfull(const Multigraph& g, const PipelineConfig& config = {});

// Delta-colouring of a simple graph with no Delta-overfull subgraph.
// Errors: "not-simple", "odd-order", "overfull-present", "below-bound"
// (the degree bound is only enforced at full fidelity).
EdgeColoring simple_color_no_overfull(const Multigraph& g, const PipelineConfig& config = {});

struct ChromaticResult {
  int colors = 0;
  EdgeColoring coloring;
  PipelineTrace trace;
  // "empty", "two-vertices", "overfull-case", "dense-no-overfull", "oracle"
  // or "heuristic"
  std::string method;
  int lower_bound = 0;
  // colors == lower_bound, or the oracle proved it
  bool optimal = false;
};

// Routes G to the branch whose hypotheses hold; failing branches fall back
// to the oracle and then to a heuristic upper bound. Always verified.
ChromaticResult chromatic_index(const Multigraph& g, const PipelineConfig& config = {});

}  // namespace mgcolor
