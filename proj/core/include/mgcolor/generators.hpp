#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "mgcolor/multigraph.hpp"

namespace mgcolor {

Multigraph petersen();
// Petersen graph minus vertex 0, relabelled to 0..8.
Multigraph p_star();
// Petersen graph with every edge of multiplicity r.
Multigraph q(int r);
// q(r) minus vertex 0, relabelled to 0..8.
Multigraph q_star(int r);
// r-fold complete graph on n vertices.
Multigraph folded_complete(int n, int r);

enum class Regime { kRegular, kMinDegree };

struct GeneratorSpec {
  int n = 0;
  int r = 1;
  Regime regime = Regime::kRegular;
  int target = 0;  // k for regular, delta for min-degree
  std::uint64_t seed = 1;
};

// k-regular multigraph with mu <= r, superposing random Hamilton cycles and
// perfect matchings (of the complement when that is sparser).
// Errors: "infeasible" (nk odd, k > r(n-1), ...), "generation-failed".
Multigraph gen_regular_multigraph(const GeneratorSpec& spec);

// Non-regular multigraph with mu <= r and minimum degree >= delta: a random
// regular base plus random extra edges.
Multigraph gen_min_degree_multigraph(const GeneratorSpec& spec);

// Non-regular multigraph with mu = r and minimum degree >= target: r-fold K_n
// minus a removal graph that leaves 3 or 4 vertices pairwise at multiplicity r
// and more than 2r below the maximum degree, so that no edge can be added
// between them. Even n >= 10. Errors: "infeasible", "generation-failed".
Multigraph gen_deficient_dense_multigraph(const GeneratorSpec& spec);

Multigraph generate(const GeneratorSpec& spec);

// petersen, p_star, q(r), q_star(r), folded_complete(n,r),
// regular_dense(n,r,k,seed), deficient_dense(n,r,delta,seed). Errors: "unknown-instance", "bad-params".
Multigraph named_instance(std::string_view name);

}  // namespace mgcolor
