#include "mgcolor/density.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "mgcolor/error.hpp"

namespace mgcolor {

const char* to_string(OverfullClass c) {
  switch (c) {
    case OverfullClass::kNone:
      return "none";
    case OverfullClass::kFull:
      return "full";
    case OverfullClass::kOverfull:
      return "overfull";
  }
  return "none";
}

namespace {

std::vector<int> MaskToVertices(std::uint32_t mask) {
  std::vector<int> out;
  for (int v = 0; mask != 0; ++v, mask >>= 1) {
    if (mask & 1U) out.push_back(v);
  }
  return out;
}

std::vector<int> AllBut(int n, int skip) {
  std::vector<int> out;
  for (int v = 0; v < n; ++v) {
    if (v != skip) out.push_back(v);
  }
  return out;
}

int InducedMaxDegree(const Multigraph& g, const std::vector<int>& xs) {
  int best = 0;
  for (int x : xs) {
    int d = 0;
    for (int y : xs) d += g.mult(x, y);
    best = std::max(best, d);
  }
  return best;
}

// Keeps the best candidate under (value, lexicographically smallest set).
struct Best {
  bool present = false;
  std::int64_t edges = 0;
  std::int64_t half = 1;  // (|X|-1)/2
  std::vector<int> set;

  void Offer(std::int64_t e, std::int64_t h, std::vector<int> xs) {
    if (!present) {
      present = true;
      edges = e;
      half = h;
      set = std::move(xs);
      return;
    }
    const std::int64_t lhs = e * half;
    const std::int64_t rhs = edges * h;
    if (lhs > rhs || (lhs == rhs && xs < set)) {
      edges = e;
      half = h;
      set = std::move(xs);
    }
  }
};

void OfferClass(OverfullClass cls, std::vector<int> xs, OverfullClass& best_cls,
                std::vector<int>& best_set) {
  if (cls == OverfullClass::kNone) return;
  if (static_cast<int>(cls) > static_cast<int>(best_cls) ||
      (cls == best_cls && xs < best_set)) {
    best_cls = cls;
    best_set = std::move(xs);
  }
}

OverfullClass Classify(std::int64_t edges, int order, int induced_max, int max_degree) {
  if (order % 2 == 0 || induced_max != max_degree) return OverfullClass::kNone;
  const std::int64_t bound = static_cast<std::int64_t>(max_degree) * (order / 2);
  if (edges > bound) return OverfullClass::kOverfull;
  if (edges == bound) return OverfullClass::kFull;
  return OverfullClass::kNone;
}

DensityReport Finish(const Multigraph& g, const Best& best, OverfullClass cls,
                     std::vector<int> cls_set) {
  DensityReport report;
  if (best.present) {
    report.omega = Rational(best.edges, best.half);
    report.witness = best.set;
  }
  report.chi_f = std::max(Rational(g.max_degree()), report.omega);
  report.classification = cls;
  report.class_witness = std::move(cls_set);
  return report;
}

DensityReport Enumerate(const Multigraph& g) {
  const int n = g.order();
  const int delta = g.max_degree();
  const std::uint32_t full = n >= 32 ? 0xffffffffU : ((1U << n) - 1U);
  std::vector<std::int64_t> edges(static_cast<std::size_t>(full) + 1, 0);
  Best best;
  OverfullClass cls = OverfullClass::kNone;
  std::vector<int> cls_set;
  for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
    const int low = std::countr_zero(mask);
    const std::uint32_t rest = mask & (mask - 1);
    std::int64_t e = edges[rest];
    for (std::uint32_t r = rest; r != 0; r &= r - 1) e += g.mult(low, std::countr_zero(r));
    edges[mask] = e;
    const int size = std::popcount(mask);
    if (size < 3 || size % 2 == 0) continue;
    const std::int64_t half = (size - 1) / 2;
    best.Offer(e, half, MaskToVertices(mask));
    if (e >= static_cast<std::int64_t>(delta) * half) {
      const auto xs = MaskToVertices(mask);
      OfferClass(Classify(e, size, InducedMaxDegree(g, xs), delta), xs, cls, cls_set);
    }
  }
  return Finish(g, best, cls, std::move(cls_set));
}

}  // namespace

std::vector<std::int64_t> vertex_deleted_edge_counts(const Multigraph& g) {
  std::vector<std::int64_t> out(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) out[static_cast<std::size_t>(v)] = g.edge_count() - g.degree(v);
  return out;
}

bool fastpath_applicable(const Multigraph& g) {
  const int n = g.order();
  if (n < 4 || n % 2 != 0) return false;
  return 2LL * g.min_degree() > static_cast<long long>(g.max_multiplicity()) * n;
}

DensityReport density_fastpath(const Multigraph& g) {
  if (!fastpath_applicable(g)) {
    throw PreconditionError("fastpath-inapplicable",
                            "needs even n >= 4 and delta > mu*n/2 (n=" +
                                std::to_string(g.order()) + ", delta=" +
                                std::to_string(g.min_degree()) + ", mu=" +
                                std::to_string(g.max_multiplicity()) + ")");
  }
  const int n = g.order();
  const int delta = g.max_degree();
  const std::int64_t half = (n - 2) / 2;
  Best best;
  OverfullClass cls = OverfullClass::kNone;
  std::vector<int> cls_set;
  const auto counts = vertex_deleted_edge_counts(g);
  // Smaller odd sets never reach ratio Delta here, so only G - v can carry the
  // maximum once it is >= Delta; otherwise chi_f = Delta either way.
  for (int v = 0; v < n; ++v) {
    auto xs = AllBut(n, v);
    const std::int64_t e = counts[static_cast<std::size_t>(v)];
    best.Offer(e, half, xs);
    if (e >= static_cast<std::int64_t>(delta) * half) {
      OfferClass(Classify(e, n - 1, InducedMaxDegree(g, xs), delta), xs, cls, cls_set);
    }
  }
  return Finish(g, best, cls, std::move(cls_set));
}

DensityReport density_exact(const Multigraph& g, const DensityOptions& options) {
  if (g.order() < 3) {
    DensityReport report;
    report.chi_f = Rational(g.max_degree());
    return report;
  }
  if (g.order() > options.enumeration_cap) {
    if (fastpath_applicable(g)) return density_fastpath(g);
    throw PreconditionError(
        "cap-exceeded", "n=" + std::to_string(g.order()) + " exceeds the enumeration cap " +
                            std::to_string(options.enumeration_cap) +
                            " and the fast path needs even n with delta > mu*n/2");
  }
  return Enumerate(g);
}

DensityReport analyze_density(const Multigraph& g, const DensityOptions& options) {
  if (fastpath_applicable(g)) return density_fastpath(g);
  return density_exact(g, options);
}

OverfullResult overfull_witness(const Multigraph& g, const DensityOptions& options) {
  const DensityReport report = analyze_density(g, options);
  return {report.classification, report.class_witness};
}

int count_overfull_deletions(const Multigraph& g) {
  if (g.order() % 2 != 0) throw PreconditionError("odd-order", "needs even n");
  const int n = g.order();
  if (n < 4) return 0;
  const int delta = g.max_degree();
  const std::int64_t bound = static_cast<std::int64_t>(delta) * ((n - 2) / 2);
  int count = 0;
  for (int v = 0; v < n; ++v) {
    const std::int64_t e = g.edge_count() - g.degree(v);
    if (e > bound && InducedMaxDegree(g, AllBut(n, v)) == delta) ++count;
  }
  return count;
}

std::vector<int> full_deletions(const Multigraph& g) {
  const int n = g.order();
  std::vector<int> out;
  if (n < 4 || n % 2 != 0) return out;
  const int delta = g.max_degree();
  const std::int64_t bound = static_cast<std::int64_t>(delta) * ((n - 2) / 2);
  for (int v = 0; v < n; ++v) {
    const std::int64_t e = g.edge_count() - g.degree(v);
    if (e == bound && InducedMaxDegree(g, AllBut(n, v)) == delta) out.push_back(v);
  }
  return out;
}

}  // namespace mgcolor
