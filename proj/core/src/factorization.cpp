#include "mgcolor/factorization.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "build_context.hpp"
#include "mgcolor/error.hpp"
#include "mgcolor/euler.hpp"
#include "mgcolor/fg_coloring.hpp"
#include "mgcolor/hamilton.hpp"

namespace mgcolor {

namespace detail {

std::uint64_t BuildContext::NextSeed() {
  // splitmix64 step
  std::uint64_t z = options_.seed + 0x9E3779B97F4A7C15ULL * ++counter_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

HamiltonOptions BuildContext::Hamilton() {
  HamiltonOptions h;
  h.seed = NextSeed();
  h.exhaustive_cap = options_.hamilton_exhaustive_cap;
  return h;
}

SearchOptions BuildContext::Search() {
  SearchOptions s = options_.search;
  s.seed = NextSeed();
  return s;
}

StageRecord& BuildContext::Note(const std::string& name) {
  if (options_.trace != nullptr) return options_.trace->add(name);
  scratch_ = StageRecord{name, {}, {}};
  return scratch_;
}

Multigraph PeelPerfectMatching(Multigraph& g, std::span<const int> avoid, BuildContext& ctx,
                               const std::string& stage) {
  Multigraph m;
  try {
    m = perfect_matching_avoiding(g, avoid, ctx.Hamilton());
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kConstruction) throw;
    throw ConstructionError(stage, e.what(), e.code());
  }
  g = remove_layer(g, m);
  return m;
}

}  // namespace detail

namespace {

using detail::BuildContext;

bool IsSimpleRegular(const Multigraph& g, int d) {
  if (!g.is_simple()) return false;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) != d) return false;
  }
  return true;
}

std::string Str(std::int64_t x) { return std::to_string(x); }

struct LayerSplit {
  Multigraph cycle;
  SimplePair halves;
};

// Hamilton cycle avoiding a maximal singleton forest, then the alternating
// split of the rest into two simple (side_degree)-regular graphs.
LayerSplit SplitRegularLayer(const Multigraph& h, int side_degree, BuildContext& ctx,
                             const std::string& stage) {
  const Multigraph forest = singleton_forest(h);
  LayerSplit out;
  out.cycle = require_hamilton_cycle(remove_layer(h, forest), stage, ctx.Hamilton());
  out.halves = split_two_simple(h, out.cycle);
  if (!IsSimpleRegular(out.halves.first, side_degree) ||
      !IsSimpleRegular(out.halves.second, side_degree)) {
    throw ConstructionError(stage, "split halves are not simple " + Str(side_degree) + "-regular",
                            "split-degree");
  }
  return out;
}

Decomposition SplitOddLayer(const Multigraph& g, const Multigraph& h1, int r, int s,
                            BuildContext& ctx, StageRecord& note) {
  const int n = g.order();
  const std::string stage = "odd-split";
  const RegimeConstants rc = ctx.constants();

  // Drop the singleton edges of G whose two copies both landed in this layer.
  Multigraph h1p = h1;
  int dropped = 0;
  for (const Bundle& b : g.bundles()) {
    if (b.mult == 1 && h1.mult(b.u, b.v) == 2) {
      h1p.set_mult(b.u, b.v, 0);
      ++dropped;
    }
  }
  note.set("dropped_pairs", dropped);

  for (int v = 0; v < n; ++v) {
    int singles = 0;
    int multiples = 0;
    for (int w : h1p.neighbors(v)) (h1p.mult(v, w) == 1 ? singles : multiples) += 1;
    const bool ok = 3 * singles >= n + 3 * rc.census_single_extra(n) ||
                    multiples >= rc.census_multiple(n);
    if (!ok) {
      throw ConstructionError(stage,
                              "vertex " + Str(v) + " has " + Str(singles) + " singleton and " +
                                  Str(multiples) + " multiple neighbours",
                              "census-violated");
    }
  }
  if (!hamilton_cycle(h1p, ctx.Hamilton()).found()) {
    throw ConstructionError(stage, "reduced layer has no Hamilton cycle", "layer-not-hamiltonian");
  }

  const Multigraph forest = singleton_forest(h1p);
  const Multigraph cycle =
      require_hamilton_cycle(remove_layer(h1p, forest), stage, ctx.Hamilton());
  const SimplePair halves = split_two_simple(h1, cycle);
  if (!IsSimpleRegular(halves.first, s - 1) || !IsSimpleRegular(halves.second, s - 1)) {
    throw ConstructionError(stage, "split halves are not simple " + Str(s - 1) + "-regular",
                            "split-degree");
  }

  Multigraph rest;
  try {
    rest = remove_layer(remove_layer(g, cycle), halves.first);
  } catch (const Error& e) {
    throw ConstructionError(stage, std::string("cycle and half leave G: ") + e.what(),
                            "not-a-subgraph");
  }
  if (rest.max_multiplicity() > r - 1) {
    throw ConstructionError(stage, "residual multiplicity " + Str(rest.max_multiplicity()) +
                                       " exceeds " + Str(r - 1),
                            "multiplicity-not-reduced");
  }
  if (!rest.is_regular() || rest.degree(0) != (r - 1) * s - 1) {
    throw ConstructionError(stage, "residual is not " + Str((r - 1) * s - 1) + "-regular",
                            "residual-degree");
  }
  note.stats("residual_", rest);

  Decomposition out;
  for (int i = 0; i < r - 2; ++i) {
    out.layers.push_back({LayerKind::kMatching, 1, detail::PeelPerfectMatching(rest, {}, ctx, stage)});
  }
  out.layers.push_back({LayerKind::kHamiltonCycle, 2, cycle});
  out.layers.push_back({LayerKind::kSimpleRegular, s - 1, halves.first});
  Decomposition even = detail::DecomposeEven(rest, r - 1, ctx);
  for (Layer& l : even.layers) out.layers.push_back(std::move(l));
  return out;
}

void RequireEvenRegular(const Multigraph& g) {
  if (g.order() % 2 != 0) throw PreconditionError("odd-order", "n = " + Str(g.order()) + " is odd");
  if (!g.is_regular()) throw PreconditionError("not-regular", "G is not regular");
  if (g.order() == 0 || g.edge_count() == 0) throw PreconditionError("empty", "G has no edges");
}

// 2k >= r (n + 2c), i.e. k >= r (n/2 + c).
void RequireBound(const Multigraph& g, int r, int c) {
  const std::int64_t k = g.degree(0);
  const std::int64_t n = g.order();
  if (2 * k < static_cast<std::int64_t>(r) * (n + 2 * c)) {
    throw PreconditionError("below-bound", "k = " + Str(k) + " < r(n/2 + " + Str(c) + ") = " +
                                               Str(r) + "*" + Str(n / 2 + c));
  }
}

void Verify(const Multigraph& g, const Decomposition& d, const std::string& stage) {
  if (auto bad = check_decomposition(g, d)) {
    throw ConstructionError(stage, *bad, "verification-failed");
  }
}

FactorizationCertificate Certify(const Multigraph& g, std::vector<Multigraph> matchings) {
  FactorizationCertificate cert{std::move(matchings), g};
  if (auto bad = check_factorization(cert)) {
    throw ConstructionError("factorize", *bad, "verification-failed");
  }
  return cert;
}

}  // namespace

namespace detail {

Decomposition DecomposeEven(const Multigraph& g, int r, BuildContext& ctx) {
  const int n = g.order();
  const int k = g.degree(0);
  const int s = k / r;
  StageRecord& note = ctx.Note("even-split");
  note.stats("", g).set("r", r).set("s", s);
  std::vector<Multigraph> parts;
  try {
    parts = fg_classes_even(g, FGSpec::uniform(n, 2 * s, 2), r / 2);
  } catch (const Error& e) {
    throw ConstructionError("even-split", e.what(), e.code());
  }
  Decomposition out;
  for (const Multigraph& h : parts) {
    LayerSplit split = SplitRegularLayer(h, s - 1, ctx, "even-split");
    out.layers.push_back({LayerKind::kHamiltonCycle, 2, std::move(split.cycle)});
    out.layers.push_back({LayerKind::kSimpleRegular, s - 1, std::move(split.halves.first)});
    out.layers.push_back({LayerKind::kSimpleRegular, s - 1, std::move(split.halves.second)});
  }
  return out;
}

Decomposition DecomposeOddA(const Multigraph& g, int r, BuildContext& ctx) {
  const int n = g.order();
  const int s = g.degree(0) / r;
  const std::string stage = "odd-split";
  StageRecord& note = ctx.Note(stage);
  note.stats("", g).set("r", r).set("s", s);

  const Orientation d = orient_doubled(g);
  if (auto bad = check_orientation(d, g, std::max(2, r))) {
    throw ConstructionError(stage, *bad, "orientation");
  }
  const DoubleCover cover = double_cover(d);
  std::vector<Multigraph> classes;
  try {
    classes = fg_classes_bipartite(cover.graph, FGSpec::uniform(2 * n, s, 1), cover.parts, r);
  } catch (const Error& e) {
    throw ConstructionError(stage, e.what(), e.code());
  }
  std::vector<Multigraph> layers;
  std::vector<std::int64_t> forest_edges;
  for (const Multigraph& c : classes) {
    layers.push_back(collapse_cover(c, n));
    std::int64_t count = 0;
    for (const Bundle& b : d.singleton_pairs.bundles()) count += layers.back().mult(b.u, b.v);
    forest_edges.push_back(count);
  }
  const auto best = static_cast<std::size_t>(
      std::min_element(forest_edges.begin(), forest_edges.end()) - forest_edges.begin());
  note.set("tstar", d.singleton_pairs.edge_count())
      .set("layer", static_cast<std::int64_t>(best))
      .set("tstar_in_layer", forest_edges[best]);
  return SplitOddLayer(g, layers[best], r, s, ctx, note);
}

Decomposition DecomposeOddB(const Multigraph& g, int r, BuildContext& ctx) {
  Multigraph rest = g;
  Decomposition out;
  for (int i = 0; i < r; ++i) {
    out.layers.push_back({LayerKind::kMatching, 1, PeelPerfectMatching(rest, {}, ctx, "odd-split-b")});
  }
  Decomposition a = DecomposeOddA(rest, r, ctx);
  for (Layer& l : a.layers) out.layers.push_back(std::move(l));
  return out;
}

std::vector<Multigraph> ColorWithSearch(const Multigraph& g, int colors, BuildContext& ctx,
                                        const std::string& stage) {
  if (g.edge_count() == 0) return std::vector<Multigraph>(static_cast<std::size_t>(colors), Multigraph(g.order()));
  if (auto found = kempe_color(g, colors, ctx.Search())) return *found;
  ExactResult exact = exact_color(g, colors, ctx.options().exact);
  if (exact.status == ExactStatus::kColored) return exact.classes;
  throw ConstructionError(stage,
                          "no " + Str(colors) + "-colouring found (" +
                              (exact.status == ExactStatus::kImpossible ? "none exists" : "budget spent") + ")",
                          "search-exhausted");
}

std::vector<Multigraph> FactorizeSimple(const Multigraph& g, BuildContext& ctx) {
  const int n = g.order();
  if (g.edge_count() == 0) return {};
  int d = g.degree(0);
  Multigraph rest = g;
  std::vector<Multigraph> out;
  int peeled = 0;
  while (2 * d >= n + 4) {
    const Multigraph cycle = require_hamilton_cycle(rest, "simple-factorization", ctx.Hamilton());
    SimplePair halves = split_hamilton_cycle(cycle);
    out.push_back(std::move(halves.first));
    out.push_back(std::move(halves.second));
    rest = remove_layer(rest, cycle);
    d -= 2;
    ++peeled;
  }
  ctx.Note("simple-factorization").stats("", g).set("cycles", peeled).set("searched_degree", d);
  for (Multigraph& m : ColorWithSearch(rest, d, ctx, "simple-factorization")) out.push_back(std::move(m));
  return out;
}

std::vector<Multigraph> FactorizeRegular(const Multigraph& g, BuildContext& ctx) {
  Multigraph rest = g;
  std::vector<Multigraph> out;
  while (rest.edge_count() > 0) {
    const int k = rest.degree(0);
    const int r = rest.max_multiplicity();
    if (r == 1) {
      for (Multigraph& m : FactorizeSimple(rest, ctx)) out.push_back(std::move(m));
      break;
    }
    if (k % r != 0) {
      out.push_back(PeelPerfectMatching(rest, {}, ctx, "factorize"));
      continue;
    }
    const int s = k / r;
    const Decomposition d = r % 2 == 0 ? DecomposeEven(rest, r, ctx)
                            : s % 2 == 0 ? DecomposeOddA(rest, r, ctx)
                                         : DecomposeOddB(rest, r, ctx);
    Verify(rest, d, "factorize");
    for (const Layer& layer : d.layers) {
      switch (layer.kind) {
        case LayerKind::kMatching:
          out.push_back(layer.graph);
          break;
        case LayerKind::kHamiltonCycle: {
          SimplePair halves = split_hamilton_cycle(layer.graph);
          out.push_back(std::move(halves.first));
          out.push_back(std::move(halves.second));
          break;
        }
        case LayerKind::kSimpleRegular:
        case LayerKind::kResidual:
          for (Multigraph& m : FactorizeSimple(layer.graph, ctx)) out.push_back(std::move(m));
          break;
      }
    }
    break;
  }
  return out;
}

}  // namespace detail

SimplePair split_two_simple(const Multigraph& h, const Multigraph& cycle,
                            const SplitOptions& options) {
  const int n = h.order();
  if (h.max_multiplicity() > 2) {
    throw PreconditionError("multiplicity-above-two", "mu(H) = " + Str(h.max_multiplicity()));
  }
  if (cycle.order() != n || !is_subgraph(cycle, h)) {
    throw PreconditionError("not-a-subgraph", "C is not contained in H");
  }
  const Multigraph rest = remove_layer(h, cycle);
  SimplePair out{Multigraph(n), Multigraph(n)};
  Multigraph r(n + 1);  // vertex n is the extra vertex y
  for (const Bundle& b : rest.bundles()) {
    if (b.mult == 2) {
      out.first.add(b.u, b.v);
      out.second.add(b.u, b.v);
    } else {
      r.add(b.u, b.v);
    }
  }
  std::vector<int> odd;
  for (int v = 0; v < n; ++v) {
    if (r.degree(v) % 2 != 0) odd.push_back(v);
  }
  if (!odd.empty()) {
    if (!options.allow_odd) {
      throw ConstructionError("split", Str(static_cast<std::int64_t>(odd.size())) +
                                           " vertices of odd singleton degree",
                              "r-odd");
    }
    for (int v : odd) r.add(v, n);
  }
  if (r.edge_count() == 0) return out;
  if (nontrivial_components(r) > 1) {
    throw ConstructionError("split", "singleton graph R has " + Str(nontrivial_components(r)) +
                                         " components",
                            "r-disconnected");
  }
  int start = -1;
  if (!odd.empty()) {
    start = n;
  } else {
    for (int v : options.preferred_starts) {
      if (v >= 0 && v < n && r.degree(v) > 0) {
        start = v;
        break;
      }
    }
    for (int v = 0; start < 0 && v < n; ++v) {
      if (r.degree(v) > 0) start = v;
    }
  }
  const Trail tour = euler_tour_from(r, start);
  for (std::size_t i = 0; i < tour.edges.size(); ++i) {
    const EdgeCopy& e = tour.edges[i];
    if (e.v == n) continue;
    (i % 2 == 0 ? out.first : out.second).add(e.u, e.v);
  }
  return out;
}

SimplePair split_hamilton_cycle(const Multigraph& cycle) {
  const int n = cycle.order();
  if (n % 2 != 0 || !is_hamilton_cycle(cycle)) {
    throw PreconditionError("not-even-cycle", "expected a Hamilton cycle on an even vertex count");
  }
  SimplePair out{Multigraph(n), Multigraph(n)};
  int prev = -1;
  int cur = 0;
  for (int i = 0; i < n; ++i) {
    const std::vector<int> nb = cycle.neighbors(cur);
    const int next = nb[0] != prev ? nb[0] : nb[1];
    (i % 2 == 0 ? out.first : out.second).add(cur, next);
    prev = cur;
    cur = next;
  }
  return out;
}

Multigraph singleton_subgraph(const Multigraph& g) {
  Multigraph r(g.order());
  for (const Bundle& b : g.bundles()) {
    if (b.mult == 1) r.add(b.u, b.v);
  }
  return r;
}

Multigraph singleton_forest(const Multigraph& g) {
  const int n = g.order();
  const Multigraph r = singleton_subgraph(g);
  std::vector<int> odd;
  for (int v = 0; v < n; ++v) {
    if (r.degree(v) % 2 != 0) odd.push_back(v);
  }
  Multigraph base(n);
  if (odd.empty()) {
    base = bounded_spanning_forest(r);
  } else {
    Multigraph joined = with_extra_vertices(r, 1);
    for (int v : odd) joined.add(v, n);
    base = restrict_to_prefix(bounded_spanning_forest(joined), n);
  }
  // Grow to a spanning forest of R.
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const Bundle& b : base.bundles()) parent[static_cast<std::size_t>(find(b.u))] = find(b.v);
  for (const Bundle& b : r.bundles()) {
    const int a = find(b.u);
    const int c = find(b.v);
    if (a == c) continue;
    parent[static_cast<std::size_t>(a)] = c;
    base.add(b.u, b.v);
  }
  return base;
}

Decomposition decompose_even_r(const Multigraph& g, const FactorOptions& options) {
  RequireEvenRegular(g);
  const int r = g.max_multiplicity();
  if (r % 2 != 0) throw PreconditionError("odd-multiplicity", "mu(G) = " + Str(r) + " is odd");
  if (g.degree(0) % r != 0) {
    throw PreconditionError("not-divisible", "k = " + Str(g.degree(0)) + " is not a multiple of r = " + Str(r));
  }
  RequireBound(g, r, options.constants().even_split());
  BuildContext ctx(options);
  Decomposition d = detail::DecomposeEven(g, r, ctx);
  Verify(g, d, "even-split");
  return d;
}

namespace {

int RequireOddSplit(const Multigraph& g, const FactorOptions& options) {
  RequireEvenRegular(g);
  const RegimeConstants rc = options.constants();
  if (g.order() < rc.odd_split_min_order()) {
    throw PreconditionError("order-too-small",
                            "n = " + Str(g.order()) + " < " + Str(rc.odd_split_min_order()));
  }
  const int r = g.max_multiplicity();
  if (r % 2 == 0) throw PreconditionError("even-multiplicity", "mu(G) = " + Str(r) + " is even");
  if (r < 3) throw PreconditionError("multiplicity-below-three", "mu(G) = " + Str(r));
  if (g.degree(0) % r != 0) {
    throw PreconditionError("not-divisible", "k = " + Str(g.degree(0)) + " is not a multiple of r = " + Str(r));
  }
  return r;
}

}  // namespace

Decomposition decompose_odd_r_a(const Multigraph& g, const FactorOptions& options) {
  const int r = RequireOddSplit(g, options);
  const int s = g.degree(0) / r;
  if (s % 2 != 0) throw PreconditionError("odd-s", "s = " + Str(s) + " is odd; use variant (b)");
  RequireBound(g, r, options.constants().odd_split_even_s());
  BuildContext ctx(options);
  Decomposition d = detail::DecomposeOddA(g, r, ctx);
  Verify(g, d, "odd-split");
  return d;
}

Decomposition decompose_odd_r_b(const Multigraph& g, const FactorOptions& options) {
  const int r = RequireOddSplit(g, options);
  const int s = g.degree(0) / r;
  if (s % 2 == 0) throw PreconditionError("even-s", "s = " + Str(s) + " is even; use variant (a)");
  RequireBound(g, r, options.constants().odd_split_odd_s());
  BuildContext ctx(options);
  Decomposition d = detail::DecomposeOddB(g, r, ctx);
  Verify(g, d, "odd-split-b");
  return d;
}

FactorizationCertificate one_factorize_regular(const Multigraph& g, const FactorOptions& options) {
  RequireEvenRegular(g);
  const int r = g.max_multiplicity();
  RequireBound(g, r, options.constants().factorization(r));
  BuildContext ctx(options);
  return Certify(g, detail::FactorizeRegular(g, ctx));
}

FactorizationCertificate one_factorize_simple_dense(const Multigraph& g,
                                                    const FactorOptions& options) {
  if (!g.is_simple()) throw PreconditionError("not-simple", "mu(G) = " + Str(g.max_multiplicity()));
  RequireEvenRegular(g);
  BuildContext ctx(options);
  return Certify(g, detail::FactorizeSimple(g, ctx));
}

}  // namespace mgcolor
