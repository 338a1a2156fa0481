#pragma once

#include <vector>

#include "mgcolor/multigraph.hpp"
#include "mgcolor/rational.hpp"

namespace mgcolor {

enum class OverfullClass { kNone, kFull, kOverfull };

const char* to_string(OverfullClass c);

// Exact density and fractional chromatic index.
//
// omega   max over odd X, |X| >= 3, of e(G[X]) / ((|X|-1)/2)
// chi_f   max(Delta, omega)
// witness the lexicographically smallest X attaining omega (empty if n < 3)
//
// classification looks only at induced subgraphs H with Delta(H) = Delta(G):
// overfull if e(H) > Delta * floor(|H|/2), full if equality holds at odd
// order. class_witness is the lexicographically smallest such H, preferring
// overfull over full.
struct DensityReport {
  Rational omega{0};
  Rational chi_f{0};
  std::vector<int> witness;
  OverfullClass classification = OverfullClass::kNone;
  std::vector<int> class_witness;

  friend bool operator==(const DensityReport&, const DensityReport&) = default;
};

struct DensityOptions {
  int enumeration_cap = 16;
};

// Full odd-subset enumeration; "cap-exceeded" above the cap unless the fast
// path applies, in which case it is used instead.
DensityReport density_exact(const Multigraph& g, const DensityOptions& options = {});

// True when n is even, n >= 4 and delta > mu * n / 2. In that regime every
// Delta-full or Delta-overfull subgraph is G - v for a minimum-degree v, and
// every odd set of order < n - 1 has ratio below Delta.
bool fastpath_applicable(const Multigraph& g);

// Examines only the vertex-deleted subgraphs; "fastpath-inapplicable" outside
// the regime above.
DensityReport density_fastpath(const Multigraph& g);

struct OverfullResult {
  OverfullClass classification = OverfullClass::kNone;
  std::vector<int> witness;
};

// Fast path when applicable, enumeration otherwise.
OverfullResult overfull_witness(const Multigraph& g, const DensityOptions& options = {});

// Dispatching analysis used by the CLI: fast path when applicable, else exact.
DensityReport analyze_density(const Multigraph& g, const DensityOptions& options = {});

// Number of v with G - v Delta(G)-overfull. Requires even n.
int count_overfull_deletions(const Multigraph& g);
// All v with G - v Delta(G)-full, ascending.
std::vector<int> full_deletions(const Multigraph& g);

// e(G - v) for every v.
std::vector<std::int64_t> vertex_deleted_edge_counts(const Multigraph& g);

}  // namespace mgcolor
