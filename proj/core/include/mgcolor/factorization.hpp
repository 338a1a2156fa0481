#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "mgcolor/coloring.hpp"
#include "mgcolor/edge_coloring_search.hpp"
#include "mgcolor/multigraph.hpp"
#include "mgcolor/trace.hpp"

namespace mgcolor {

// Additive constants of the degree thresholds. Full fidelity uses the
// asymptotic values; desk scale uses the smallest values that still leave
// Dirac slack for every Hamilton cycle the constructions need.
struct RegimeConstants {
  bool desk_scale = false;

  // k >= r (n/2 + c) for the even-multiplicity split
  int even_split() const { return 1; }
  // same for the odd-multiplicity split with s even / s odd
  int odd_split_even_s() const { return desk_scale ? 2 : 16; }
  int odd_split_odd_s() const { return desk_scale ? 3 : 17; }
  int odd_split_min_order() const { return desk_scale ? 4 : 96; }
  // k >= r (n/2 + c) for the full 1-factorization and the overfull branch
  int factorization(int r) const {
    if (!desk_scale) return 18;
    return r % 2 == 1 && r > 1 ? 3 : 1;
  }
  // delta >= r (n/2 + c) + s for the small-deficiency branch
  int small_deficiency(int r) const { return desk_scale ? factorization(r) : 7; }
  // largest deficiency s handled without saturation
  int deficiency_limit(int r) const { return desk_scale ? r : 6 * r; }
  // slack below k(n-2) for vertex-deleted subgraphs of the layers in the
  // even and odd multiplicity cases of the dense pipeline
  int layer_slack_even() const { return desk_scale ? 1 : 9; }
  int layer_slack_odd() const { return desk_scale ? 1 : 6; }
  // per-vertex lower bounds in the layer census of the odd split
  int census_multiple(int n) const { return desk_scale ? std::max(1, (16 * n + 95) / 96) : 16; }
  int census_single_extra(int n) const { return desk_scale ? (2 * n + 95) / 96 : 2; }
};

struct FactorOptions {
  bool desk_scale = false;
  std::uint64_t seed = 1;
  int hamilton_exhaustive_cap = 20;
  SearchOptions search;
  ExactOptions exact{5'000'000};
  // Optional stage log; factorization stages carry fields only.
  PipelineTrace* trace = nullptr;

  RegimeConstants constants() const { return RegimeConstants{desk_scale}; }
};

struct SplitOptions {
  // Join the odd vertices of R to an extra vertex y and start the tour there.
  bool allow_odd = false;
  // Start candidates for the tour when R is even; the first one on R wins.
  std::vector<int> preferred_starts;
};

struct SimplePair {
  Multigraph first;
  Multigraph second;
};

// H - E(C) as two simple graphs: every doubleton bundle gives one copy to
// each side, the singleton edges R are alternated along an Euler tour.
// Errors: "multiplicity-above-two", "not-a-subgraph", "r-odd",
// "r-disconnected".
SimplePair split_two_simple(const Multigraph& h, const Multigraph& cycle,
                            const SplitOptions& options = {});

// The two perfect matchings formed by alternate edges of a Hamilton cycle
// on an even number of vertices, walking from vertex 0.
SimplePair split_hamilton_cycle(const Multigraph& cycle);

// Bundles of multiplicity exactly 1, as a simple graph.
Multigraph singleton_subgraph(const Multigraph& g);

// Spanning forest of the singleton edges with as many edges as possible;
// when the singleton graph is even its degrees obey d_T(v) <= 1 + d_R(v)/2.
Multigraph singleton_forest(const Multigraph& g);

// r/2 Hamilton cycles and r simple (s-1)-regular layers for a k-regular G of
// even order with even r = mu(G), k = r s >= r (n/2 + 1).
Decomposition decompose_even_r(const Multigraph& g, const FactorOptions& options = {});

// r-2 perfect matchings, (r+1)/2 Hamilton cycles, one simple (s-1)-regular
// and r-1 simple (s-2)-regular layers; r = mu(G) odd >= 3, s even.
Decomposition decompose_odd_r_a(const Multigraph& g, const FactorOptions& options = {});

// 2r-2 perfect matchings, (r+1)/2 Hamilton cycles, one simple (s-2)-regular
// and r-1 simple (s-3)-regular layers; s odd. Peels r matchings, then (a).
Decomposition decompose_odd_r_b(const Multigraph& g, const FactorOptions& options = {});

// k perfect matchings partitioning a k-regular G of even order with
// k >= r (n/2 + c), r = mu(G).
FactorizationCertificate one_factorize_regular(const Multigraph& g,
                                               const FactorOptions& options = {});

// d perfect matchings of a simple d-regular graph of even order. Peels
// Hamilton cycles while the degree stays >= n/2 + 2, then searches.
// Failure is "search-exhausted".
FactorizationCertificate one_factorize_simple_dense(const Multigraph& g,
                                                    const FactorOptions& options = {});

}  // namespace mgcolor
