#include "mgcolor/pipeline.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "build_context.hpp"
#include "mgcolor/density.hpp"
#include "mgcolor/error.hpp"
#include "mgcolor/euler.hpp"
#include "mgcolor/fg_coloring.hpp"
#include "mgcolor/hamilton.hpp"

namespace mgcolor {

FactorOptions PipelineConfig::factor_options(PipelineTrace* trace) const {
  FactorOptions o;
  o.desk_scale = desk_scale;
  o.seed = seed;
  o.hamilton_exhaustive_cap = hamilton_exhaustive_cap;
  o.search = search;
  o.exact = exact;
  o.trace = trace;
  return o;
}

namespace {

using Classes = std::vector<Multigraph>;

std::string Str(std::int64_t x) { return std::to_string(x); }

// Owns the trace the build context writes into; must not move.
struct Ctx {
  PipelineConfig cfg;
  PipelineTrace trace;
  detail::BuildContext build;

  Ctx(const PipelineConfig& config, int order)
      : cfg(config), build(config.factor_options(&trace)) {
    trace.added = Multigraph(order);
  }
  Ctx(const Ctx&) = delete;
  Ctx& operator=(const Ctx&) = delete;
};

void Emit(StageRecord& rec, Classes& out, const Multigraph& layer) {
  rec.layers.push_back(layer);
  out.push_back(layer);
}

void EmitAll(StageRecord& rec, Classes& out, const Classes& layers) {
  for (const Multigraph& m : layers) Emit(rec, out, m);
}

int LowestMinDegree(const Multigraph& g, int exclude = -1) {
  int best = -1;
  for (int v = 0; v < g.order(); ++v) {
    if (v == exclude) continue;
    if (best < 0 || g.degree(v) < g.degree(best)) best = v;
  }
  return best;
}

// Delta (n-2)/2 - e(G - v).
std::int64_t Deficiency(const Multigraph& g, int v) {
  const std::int64_t n = g.order();
  return static_cast<std::int64_t>(g.max_degree()) * (n - 2) / 2 - (g.edge_count() - g.degree(v));
}

// Some 2 e(G - x) = Delta(G) (n - 2); Delta(G - x) may be smaller.
bool VertexDeletedFull(const Multigraph& g) {
  const int n = g.order();
  if (n < 4 || n % 2 != 0) return false;
  return Deficiency(g, LowestMinDegree(g)) == 0;
}

// 2 delta >= r (n + 2c).
bool DegreeBound(const Multigraph& g, int r, int c) {
  return 2 * static_cast<std::int64_t>(g.min_degree()) >=
         static_cast<std::int64_t>(r) * (g.order() + 2 * c);
}

bool DenseBound(const Multigraph& g, const Rational& epsilon) {
  const Rational lhs(2 * static_cast<std::int64_t>(g.min_degree()));
  const Rational rhs = Rational(static_cast<std::int64_t>(g.max_multiplicity()) * g.order()) *
                       (Rational(1) + epsilon);
  return lhs >= rhs;
}

DensityReport Analyze(const Multigraph& g, const PipelineConfig& cfg) {
  return analyze_density(g, DensityOptions{cfg.enumeration_cap});
}

// Every vertex-deleted subgraph of h has at most D (n-2)/2 - c edges.
void LayerBound(const Multigraph& h, int d, int c, const std::string& stage) {
  const std::int64_t n = h.order();
  const std::int64_t worst = h.edge_count() - h.min_degree();
  if (h.max_degree() > d || 2 * worst > static_cast<std::int64_t>(d) * (n - 2) - 2 * c) {
    throw ConstructionError(stage,
                            "layer has a vertex-deleted subgraph with " + Str(worst) +
                                " edges, bound " + Str(d) + "(n-2)/2 - " + Str(c),
                            "layer-bound");
  }
}

Classes SimpleColorBounded(const Multigraph& h, int colors, Ctx& ctx, const std::string& stage) {
  const std::int64_t n = h.order();
  if (h.max_degree() > colors) {
    throw ConstructionError(stage, "maximum degree " + Str(h.max_degree()) + " exceeds " + Str(colors),
                            "split-degree");
  }
  if (n >= 4 && 2 * (h.edge_count() - h.min_degree()) > static_cast<std::int64_t>(colors) * (n - 2)) {
    throw ConstructionError(stage, "half has a " + Str(colors) + "-overfull vertex-deleted subgraph",
                            "layer-overfull");
  }
  return detail::ColorWithSearch(h, colors, ctx.build, stage);
}

// Spanning forest of the singleton edges that contains every edge from the
// odd vertices to an auxiliary vertex; the auxiliary edges are dropped.
Multigraph ForcedForest(const Multigraph& h) {
  const int n = h.order();
  const Multigraph r = singleton_subgraph(h);
  std::vector<int> odd;
  for (int v = 0; v < n; ++v) {
    if (r.degree(v) % 2 != 0) odd.push_back(v);
  }
  if (odd.empty()) return singleton_forest(h);
  Multigraph joined = with_extra_vertices(r, 1);
  for (int v : odd) joined.add(v, n);
  const Multigraph bounded = bounded_spanning_forest(joined);
  std::vector<int> parent(static_cast<std::size_t>(n + 1));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  Multigraph forest(n + 1);
  auto offer = [&](int u, int v) {
    const int a = find(u);
    const int b = find(v);
    if (a == b) return;
    parent[static_cast<std::size_t>(a)] = b;
    forest.add(u, v);
  };
  for (int v : odd) offer(v, n);
  for (const Bundle& b : bounded.bundles()) offer(b.u, b.v);
  for (const Bundle& b : joined.bundles()) offer(b.u, b.v);
  return restrict_to_prefix(forest, n);
}

std::vector<int> NonMaxVertices(const Multigraph& h, int d) {
  std::vector<int> out;
  for (int v = 0; v < h.order(); ++v) {
    if (h.degree(v) < d) out.push_back(v);
  }
  return out;
}

Classes OverfullCase(const Multigraph& g, Ctx& ctx);
Classes DenseNoOverfull(const Multigraph& g, Ctx& ctx, int depth);

Classes OverfullCase(const Multigraph& g, Ctx& ctx) {
  const int n = g.order();
  Classes out;
  StageRecord& rec = ctx.trace.add("overfull-case");
  rec.stats("", g);
  if (g.is_regular()) {
    rec.set("route", "regular");
    EmitAll(rec, out, detail::FactorizeRegular(g, ctx.build));
    return out;
  }
  const int delta = g.min_degree();
  const int v = LowestMinDegree(g);
  const std::int64_t twice = 2 * (g.edge_count() - g.degree(v));
  const std::int64_t q = twice / (n - 2);
  const std::int64_t b = twice % (n - 2);
  const std::int64_t k = q - delta;
  rec.set("v", v).set("k", k).set("b", b).set("colors", delta + k + (b > 0 ? 1 : 0));
  if (k < 0 || 2 * (g.edge_count() - g.degree(v)) < static_cast<std::int64_t>(g.max_degree()) * (n - 2)) {
    throw ConstructionError("overfull-case", "G - " + Str(v) + " is neither full nor overfull",
                            "not-overfull");
  }
  Multigraph rest = g;
  if (b > 0) {
    const int w = LowestMinDegree(rest, v);
    const std::vector<int> avoid{v, w};
    Multigraph full;
    try {
      full = perfect_matching_avoiding(rest, avoid, ctx.build.Hamilton());
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kConstruction) throw;
      throw ConstructionError("overfull-case", e.what(), e.code());
    }
    Multigraph partial(n);
    const std::vector<Bundle> edges = full.bundles();
    for (std::int64_t i = 0; i < b / 2; ++i) {
      partial.add(edges[static_cast<std::size_t>(i)].u, edges[static_cast<std::size_t>(i)].v);
    }
    rest = remove_layer(rest, partial);
    StageRecord& prec = ctx.trace.add("partial-matching");
    prec.set("avoid", Str(v) + "," + Str(w)).set("size", b / 2);
    Emit(prec, out, partial);
  }
  StageRecord& mrec = ctx.trace.add("peel-avoiding");
  for (std::int64_t i = 0; i < k; ++i) {
    const int w = LowestMinDegree(rest, v);
    const std::vector<int> avoid{v, w};
    Emit(mrec, out, detail::PeelPerfectMatching(rest, avoid, ctx.build, "overfull-case"));
  }
  mrec.set("rounds", k).stats("after_", rest);
  if (!rest.is_regular() || rest.degree(0) != delta) {
    throw ConstructionError("overfull-case",
                            "terminal graph is not " + Str(delta) + "-regular (degrees " +
                                Str(rest.min_degree()) + ".." + Str(rest.max_degree()) + ")",
                            "terminal-not-regular");
  }
  StageRecord& frec = ctx.trace.add("terminal-factorization");
  frec.stats("", rest);
  EmitAll(frec, out, detail::FactorizeRegular(rest, ctx.build));
  return out;
}

Classes SmallDeficiency(const Multigraph& g, int v_star, Ctx& ctx) {
  const std::int64_t s = Deficiency(g, v_star);
  StageRecord& rec = ctx.trace.add("small-deficiency");
  rec.stats("", g).set("v", v_star).set("s", s);
  if (s == 0) return OverfullCase(g, ctx);
  Classes out;
  Multigraph rest = g;
  for (std::int64_t i = 0; i < s; ++i) {
    const int delta = rest.max_degree();
    std::vector<int> pair;
    for (int v = 0; v < rest.order() && pair.size() < 2; ++v) {
      if (v != v_star && rest.degree(v) < delta) pair.push_back(v);
    }
    if (pair.size() < 2) {
      throw ConstructionError("small-deficiency", "fewer than two sub-maximum vertices besides v*",
                              "no-deficient-pair");
    }
    Emit(rec, out, detail::PeelPerfectMatching(rest, pair, ctx.build, "small-deficiency"));
    if (rest.max_degree() != delta - 1) {
      throw ConstructionError("small-deficiency", "maximum degree did not drop", "monotone-peel");
    }
  }
  if (Deficiency(rest, v_star) != 0) {
    throw ConstructionError("small-deficiency", "G_s - v* is not full", "not-full");
  }
  for (Multigraph& m : OverfullCase(rest, ctx)) out.push_back(std::move(m));
  return out;
}

SaturationResult Saturate(const Multigraph& g) {
  SaturationResult out{g, {}, false};
  const int n = g.order();
  const int delta = g.max_degree();
  const int r = g.max_multiplicity();
  Multigraph& h = out.graph;
  auto next = [&](int& a, int& b) {
    for (a = 0; a < n; ++a) {
      if (h.degree(a) >= delta) continue;
      for (b = a + 1; b < n; ++b) {
        if (h.degree(b) < delta && h.mult(a, b) < r) return true;
      }
    }
    return false;
  };
  int a = 0;
  int b = 0;
  while (next(a, b)) {
    h.add(a, b);
    out.added.emplace_back(a, b);
    if (VertexDeletedFull(h)) {
      out.hit_full = true;
      break;
    }
  }
  return out;
}

Classes CaseEven(const Multigraph& g, int r, int k, Ctx& ctx) {
  const int n = g.order();
  const std::string stage = "case-even";
  StageRecord& rec = ctx.trace.add(stage);
  rec.stats("", g).set("r", r).set("k", k);
  const int z1 = n;
  const int w1 = n + 1;
  Multigraph gs = with_extra_vertices(g, 2);
  for (int u = 0; u < n; ++u) {
    if (g.degree(u) % r != 0) gs.add(u, z1, r - g.degree(u) % r);
  }
  if (gs.degree(z1) % r != 0) gs.add(z1, w1, r - gs.degree(z1) % r);
  rec.set("z1_degree", gs.degree(z1));
  if (2 * gs.degree(z1) > (r - 1) * n || gs.degree(z1) >= g.min_degree()) {
    throw ConstructionError(stage, "padding vertex degree " + Str(gs.degree(z1)) + " too large",
                            "padding-degree");
  }
  FGSpec spec;
  spec.g_default = 2;
  for (int v = 0; v < n + 2; ++v) {
    spec.f.push_back(v == w1 ? 2 : std::max(2, 2 * gs.degree(v) / r));
  }
  Classes parts;
  try {
    parts = fg_classes_even(gs, spec, r / 2);
  } catch (const Error& e) {
    throw ConstructionError(stage, e.what(), e.code());
  }
  Classes out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const Multigraph h = restrict_to_prefix(parts[i], n);
    StageRecord& lrec = ctx.trace.add("case-even-layer");
    lrec.set("index", static_cast<std::int64_t>(i)).stats("", h);
    LayerBound(h, 2 * k, ctx.cfg.constants().layer_slack_even(), stage);
    const Multigraph forest = singleton_forest(h);
    const Multigraph cycle = require_hamilton_cycle(remove_layer(h, forest), stage, ctx.build.Hamilton());
    const SimplePair halves = split_two_simple(h, cycle, SplitOptions{true, NonMaxVertices(h, 2 * k)});
    const SimplePair matchings = split_hamilton_cycle(cycle);
    Emit(lrec, out, matchings.first);
    Emit(lrec, out, matchings.second);
    EmitAll(lrec, out, SimpleColorBounded(halves.first, k - 1, ctx, stage));
    EmitAll(lrec, out, SimpleColorBounded(halves.second, k - 1, ctx, stage));
  }
  return out;
}

Classes CaseOdd(const Multigraph& g, int r, int k, Ctx& ctx, int depth) {
  const int n = g.order();
  const int delta = g.min_degree();
  const std::string stage = "case-odd";
  StageRecord& rec = ctx.trace.add(stage);
  rec.stats("", g).set("r", r).set("k", k);
  const int z1 = n;
  const int w1 = n + 1;
  const int z2 = n + 2;
  const int w2 = n + 3;
  const int big = n + 4;
  Multigraph gs = with_extra_vertices(g, 4);
  for (int u = 0; u < n; ++u) {
    if (g.degree(u) % r != 0) gs.add(u, z1, r - g.degree(u) % r);
  }
  if (gs.degree(z1) % r != 0) gs.add(z1, w1, r - gs.degree(z1) % r);
  for (int u = 0; u <= z1; ++u) {
    if ((gs.degree(u) / r) % 2 != 0) gs.add(u, z2, r);
  }
  if ((gs.degree(z2) / r) % 2 != 0) gs.add(z2, w2, r);
  rec.set("z1_degree", gs.degree(z1)).set("z2_degree", gs.degree(z2));
  if (2 * gs.degree(z1) > (r - 1) * n || gs.degree(z1) >= delta || 2 * gs.degree(z2) > r * n ||
      gs.degree(z2) >= delta) {
    throw ConstructionError(stage, "padding vertex degrees too large", "padding-degree");
  }

  const Orientation d = orient_doubled(gs);
  if (auto bad = check_orientation(d, gs, std::max(2, r))) {
    throw ConstructionError(stage, *bad, "orientation");
  }
  const DoubleCover cover = double_cover(d);
  FGSpec spec;
  spec.g_default = 1;
  for (int x = 0; x < 2 * big; ++x) {
    const int v = x % big;
    spec.f.push_back(v == w1 || v == w2 ? 1 : std::max(1, cover.graph.degree(x) / r));
  }
  Classes classes;
  try {
    classes = fg_classes_bipartite(cover.graph, spec, cover.parts, r);
  } catch (const Error& e) {
    throw ConstructionError(stage, e.what(), e.code());
  }
  Classes layers;
  std::vector<std::int64_t> forest_edges;
  for (const Multigraph& c : classes) {
    layers.push_back(restrict_to_prefix(collapse_cover(c, big), n));
    LayerBound(layers.back(), 2 * k, ctx.cfg.constants().layer_slack_odd(), stage);
    std::int64_t count = 0;
    for (const Bundle& b : d.singleton_pairs.bundles()) {
      if (b.v < n && g.mult(b.u, b.v) == 1) count += layers.back().mult(b.u, b.v);
    }
    forest_edges.push_back(count);
  }
  const auto best = static_cast<std::size_t>(
      std::min_element(forest_edges.begin(), forest_edges.end()) - forest_edges.begin());
  const Multigraph& h1 = layers[best];
  rec.set("layer", static_cast<std::int64_t>(best)).set("tstar_in_layer", forest_edges[best]);

  Multigraph h1p = h1;
  for (const Bundle& b : g.bundles()) {
    if (b.mult == 1 && h1.mult(b.u, b.v) == 2) h1p.set_mult(b.u, b.v, 0);
  }
  const RegimeConstants rc = ctx.cfg.constants();
  const std::int64_t multiple_floor =
      floor(ctx.cfg.epsilon * Rational(9, 10) * Rational(static_cast<std::int64_t>(n)));
  for (int v = 0; v < n; ++v) {
    int singles = 0;
    int multiples = 0;
    for (int w : h1p.neighbors(v)) (h1p.mult(v, w) == 1 ? singles : multiples) += 1;
    if (3 * singles < n + 3 * rc.census_single_extra(n) && multiples < multiple_floor) {
      throw ConstructionError(stage,
                              "vertex " + Str(v) + " has " + Str(singles) + " singleton and " +
                                  Str(multiples) + " multiple neighbours",
                              "census-violated");
    }
  }
  if (!hamilton_cycle(h1p, ctx.build.Hamilton()).found()) {
    throw ConstructionError(stage, "reduced layer has no Hamilton cycle", "layer-not-hamiltonian");
  }
  const Multigraph forest = ForcedForest(h1p);
  const Multigraph cycle = require_hamilton_cycle(remove_layer(h1p, forest), stage, ctx.build.Hamilton());
  const SimplePair halves = split_two_simple(h1, cycle, SplitOptions{true, NonMaxVertices(h1, 2 * k)});

  Multigraph g1;
  try {
    g1 = remove_layer(remove_layer(g, cycle), halves.first);
  } catch (const Error& e) {
    throw ConstructionError(stage, std::string("cycle and half leave G: ") + e.what(), "not-a-subgraph");
  }
  rec.stats("residual_", g1);
  if (g1.max_multiplicity() > r - 1) {
    throw ConstructionError(stage, "residual multiplicity " + Str(g1.max_multiplicity()) + " exceeds " + Str(r - 1),
                            "multiplicity-not-reduced");
  }
  if (g1.max_degree() != (r - 1) * k - 1) {
    throw ConstructionError(stage, "residual maximum degree " + Str(g1.max_degree()) + " is not " + Str((r - 1) * k - 1),
                            "residual-degree");
  }
  if (2 * (g1.edge_count() - g1.min_degree()) >= static_cast<std::int64_t>(g1.max_degree()) * (n - 2)) {
    throw ConstructionError(stage, "residual has a full or overfull vertex-deleted subgraph", "residual-overfull");
  }
  Classes out;
  const SimplePair matchings = split_hamilton_cycle(cycle);
  Emit(rec, out, matchings.first);
  Emit(rec, out, matchings.second);
  EmitAll(rec, out, SimpleColorBounded(halves.first, k - 1, ctx, stage));
  for (Multigraph& m : DenseNoOverfull(g1, ctx, depth + 1)) out.push_back(std::move(m));
  return out;
}

Classes DenseNoOverfull(const Multigraph& g, Ctx& ctx, int depth) {
  StageRecord& rec = ctx.trace.add("dense-no-overfull");
  rec.stats("", g).set("depth", depth);
  Classes out;
  if (g.max_multiplicity() == 1) {
    rec.set("route", "simple");
    EmitAll(rec, out, SimpleColorBounded(g, g.max_degree(), ctx, "simple-colour"));
    return out;
  }
  const int r0 = g.max_multiplicity();
  int v_star = LowestMinDegree(g);
  std::int64_t s = Deficiency(g, v_star);
  if (s < 0) {
    throw ConstructionError("dense-no-overfull", "G - " + Str(v_star) + " is overfull", "overfull-present");
  }
  const int limit = ctx.cfg.constants().deficiency_limit(r0);
  if (s <= limit) {
    rec.set("route", "small-deficiency");
    return SmallDeficiency(g, v_star, ctx);
  }
  SaturationResult sat = Saturate(g);
  StageRecord& srec = ctx.trace.add("saturation");
  srec.set("added", static_cast<std::int64_t>(sat.added.size())).set("hit_full", sat.hit_full ? "true" : "false");
  for (const auto& [a, b] : sat.added) ctx.trace.added.add(a, b);
  if (sat.hit_full) {
    rec.set("route", "saturated-full");
    return OverfullCase(sat.graph, ctx);
  }
  Multigraph h = std::move(sat.graph);
  v_star = LowestMinDegree(h);
  s = Deficiency(h, v_star);
  if (s <= limit) {
    rec.set("route", "saturated-small-deficiency");
    return SmallDeficiency(h, v_star, ctx);
  }

  StageRecord& prec = ctx.trace.add("peel-to-multiple");
  int peeled = 0;
  int r = h.max_multiplicity();
  for (;; r = h.max_multiplicity()) {
    const int delta = h.max_degree();
    if (r == 1) break;
    if (delta % r == 0 && (r % 2 == 0 || (delta / r) % 2 == 0)) break;
    if (peeled >= 2 * r0) {
      throw ConstructionError("peel-to-multiple", "too many matchings peeled", "peel-overrun");
    }
    Emit(prec, out, detail::PeelPerfectMatching(h, {}, ctx.build, "peel-to-multiple"));
    ++peeled;
    if (h.max_degree() != delta - 1) {
      throw ConstructionError("peel-to-multiple", "maximum degree did not drop", "monotone-peel");
    }
  }
  prec.set("peeled", peeled).stats("after_", h);
  Classes rest;
  if (r == 1) {
    rec.set("route", "simple");
    rest = SimpleColorBounded(h, h.max_degree(), ctx, "simple-colour");
    EmitAll(prec, out, rest);
    return out;
  }
  rec.set("route", r % 2 == 0 ? "case-even" : "case-odd");
  rest = r % 2 == 0 ? CaseEven(h, r, h.max_degree() / r, ctx)
                    : CaseOdd(h, r, h.max_degree() / r, ctx, depth);
  for (Multigraph& m : rest) out.push_back(std::move(m));
  return out;
}

EdgeColoring Finalize(const Multigraph& g, Classes classes, const PipelineTrace& trace) {
  if (trace.added.order() == g.order()) {
    for (const Bundle& b : trace.added.bundles()) {
      int need = b.mult;
      for (auto it = classes.rbegin(); it != classes.rend() && need > 0; ++it) {
        const int take = std::min(need, it->mult(b.u, b.v));
        if (take > 0) it->add(b.u, b.v, -take);
        need -= take;
      }
    }
  }
  EdgeColoring c = coloring_from_classes(classes);
  if (auto bad = verify_coloring(g, c)) throw ConstructionError("verify", *bad, "verification-failed");
  return c;
}

void RequireEvenOrder(const Multigraph& g) {
  if (g.order() % 2 != 0) throw PreconditionError("odd-order", "n = " + Str(g.order()) + " is odd");
  if (g.order() < 4) throw PreconditionError("too-small", "n = " + Str(g.order()) + " < 4");
}

std::string Witness(const std::vector<int>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + Str(xs[i]);
  return s + "}";
}

void RequireColors(std::size_t got, std::int64_t want, const std::string& stage) {
  if (static_cast<std::int64_t>(got) != want) {
    throw ConstructionError(stage, "used " + Str(static_cast<std::int64_t>(got)) + " colours, expected " + Str(want),
                            "bound-mismatch");
  }
}

}  // namespace

ColoringResult color_overfull_case(const Multigraph& g, const PipelineConfig& config) {
  RequireEvenOrder(g);
  const DensityReport rep = Analyze(g, config);
  if (rep.classification == OverfullClass::kNone && !g.is_regular() &&
      Deficiency(g, LowestMinDegree(g)) > 0) {
    throw PreconditionError("not-overfull", "G has no Delta-full or Delta-overfull subgraph");
  }
  const int r = g.max_multiplicity();
  const int c = config.constants().factorization(r);
  if (!DegreeBound(g, r, c)) {
    throw PreconditionError("below-bound", "delta = " + Str(g.min_degree()) + " < r(n/2 + " + Str(c) + ") = " +
                                               Str(r * (g.order() / 2 + c)));
  }
  Ctx ctx(config, g.order());
  Classes classes = OverfullCase(g, ctx);
  RequireColors(classes.size(), ceil(rep.chi_f), "overfull-case");
  ColoringResult out{Finalize(g, std::move(classes), ctx.trace), std::move(ctx.trace)};
  return out;
}

ColoringResult color_small_deficiency(const Multigraph& g, int v_star, const PipelineConfig& config) {
  RequireEvenOrder(g);
  if (v_star < 0 || v_star >= g.order() || g.degree(v_star) != g.min_degree()) {
    throw PreconditionError("not-minimum", "v* = " + Str(v_star) + " is not a minimum-degree vertex");
  }
  const int r = g.max_multiplicity();
  const std::int64_t s = Deficiency(g, v_star);
  const int limit = config.constants().deficiency_limit(r);
  if (s < 0 || s > limit) {
    throw PreconditionError("deficiency-out-of-range", "s = " + Str(s) + " is outside [0, " + Str(limit) + "]");
  }
  const int c = config.constants().small_deficiency(r);
  if (2 * (static_cast<std::int64_t>(g.min_degree()) - s) < static_cast<std::int64_t>(r) * (g.order() + 2 * c)) {
    throw PreconditionError("below-bound", "delta = " + Str(g.min_degree()) + " < r(n/2 + " + Str(c) + ") + s");
  }
  Ctx ctx(config, g.order());
  Classes classes = SmallDeficiency(g, v_star, ctx);
  RequireColors(classes.size(), g.max_degree(), "small-deficiency");
  ColoringResult out{Finalize(g, std::move(classes), ctx.trace), std::move(ctx.trace)};
  return out;
}

SaturationResult saturate_deficient(const Multigraph& g) { return Saturate(g); }

ColoringResult color_dense_no_overfull(const Multigraph& g, const PipelineConfig& config) {
  RequireEvenOrder(g);
  if (config.epsilon <= Rational(0) || config.epsilon >= Rational(1)) {
    throw PreconditionError("bad-epsilon", "epsilon = " + to_string(config.epsilon) + " is outside (0,1)");
  }
  const DensityReport rep = Analyze(g, config);
  if (rep.classification == OverfullClass::kOverfull) {
    throw PreconditionError("overfull-present", "Delta-overfull subgraph on " + Witness(rep.class_witness));
  }
  if (!DenseBound(g, config.epsilon)) {
    throw PreconditionError("below-bound", "delta = " + Str(g.min_degree()) + " < r(1+epsilon)n/2 with epsilon = " +
                                               to_string(config.epsilon));
  }
  Ctx ctx(config, g.order());
  Classes classes = DenseNoOverfull(g, ctx, 0);
  RequireColors(classes.size(), g.max_degree(), "dense-no-overfull");
  ColoringResult out{Finalize(g, std::move(classes), ctx.trace), std::move(ctx.trace)};
  return out;
}

EdgeColoring simple_color_no_overfull(const Multigraph& g, const PipelineConfig& config) {
  if (!g.is_simple()) throw PreconditionError("not-simple", "mu(G) = " + Str(g.max_multiplicity()));
  if (g.order() % 2 != 0) throw PreconditionError("odd-order", "n = " + Str(g.order()) + " is odd");
  if (!config.desk_scale &&
      Rational(2 * static_cast<std::int64_t>(g.min_degree())) < Rational(g.order()) * (Rational(1) + config.epsilon)) {
    throw PreconditionError("below-bound", "delta = " + Str(g.min_degree()) + " < (1+epsilon)n/2");
  }
  const DensityReport rep = Analyze(g, config);
  if (rep.classification == OverfullClass::kOverfull) {
    throw PreconditionError("overfull-present", "Delta-overfull subgraph on " + Witness(rep.class_witness));
  }
  Ctx ctx(config, g.order());
  Classes classes = detail::ColorWithSearch(g, g.max_degree(), ctx.build, "simple-colour");
  return Finalize(g, std::move(classes), ctx.trace);
}

ChromaticResult chromatic_index(const Multigraph& g, const PipelineConfig& config) {
  const int n = g.order();
  Ctx ctx(config, n);
  ChromaticResult res;
  StageRecord& rec = ctx.trace.add("dispatch");
  rec.stats("", g);
  Classes classes;
  bool done = false;

  if (g.edge_count() == 0) {
    res.method = "empty";
    done = true;
  } else if (n == 2) {
    res.method = "two-vertices";
    for (int i = 0; i < g.mult(0, 1); ++i) {
      Multigraph one(2);
      one.add(0, 1);
      Emit(rec, classes, one);
    }
    done = true;
  }

  std::optional<DensityReport> rep;
  if (!done) {
    try {
      rep = Analyze(g, config);
    } catch (const Error& e) {
      if (e.code() != "cap-exceeded") throw;
    }
  }
  res.lower_bound = rep ? static_cast<int>(ceil(rep->chi_f)) : (n == 0 ? 0 : g.max_degree());
  if (done) res.lower_bound = n == 0 ? 0 : g.max_degree();
  rec.set("lower_bound", res.lower_bound);
  if (rep) rec.set("class", to_string(rep->classification));

  auto attempt = [&](const std::string& name, auto&& run) {
    const std::size_t mark = ctx.trace.stages.size();
    const Multigraph added = ctx.trace.added;
    try {
      Classes got = run();
      RequireColors(got.size(), res.lower_bound, name);
      classes = std::move(got);
      res.method = name;
      done = true;
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::kIo) throw;
      ctx.trace.stages.resize(mark);
      ctx.trace.added = added;
      ctx.trace.add("fallback").set("from", name).set("code", e.code()).set("at", e.stage().empty() ? "-" : e.stage());
    }
  };

  if (!done && rep && n % 2 == 0 && n >= 4) {
    const int r = g.max_multiplicity();
    if (rep->classification != OverfullClass::kNone) {
      if (DegreeBound(g, r, config.constants().factorization(r))) {
        attempt("overfull-case", [&] { return OverfullCase(g, ctx); });
      }
    } else if (DenseBound(g, config.epsilon)) {
      attempt("dense-no-overfull", [&] { return DenseNoOverfull(g, ctx, 0); });
    }
  }

  if (!done && g.edge_count() <= config.oracle.edge_cap) {
    try {
      const OracleResult o = brute_force_chi(g, config.oracle);
      StageRecord& orec = ctx.trace.add("oracle");
      orec.set("chi", o.chi).set("nodes", o.nodes);
      EmitAll(orec, classes, color_classes(o.coloring, n));
      res.method = "oracle";
      done = true;
    } catch (const Error& e) {
      if (e.code() != "oracle-budget") throw;
      ctx.trace.add("fallback").set("from", "oracle").set("code", e.code());
    }
  }

  if (!done) {
    // Greedy alone succeeds at 2 Delta - 1 colours.
    for (int k = std::max(res.lower_bound, 1); k <= 2 * g.max_degree(); ++k) {
      if (auto found = kempe_color(g, k, ctx.build.Search())) {
        StageRecord& hrec = ctx.trace.add("heuristic");
        hrec.set("colors", k);
        EmitAll(hrec, classes, *found);
        res.method = "heuristic";
        done = true;
        break;
      }
    }
    if (!done) throw ConstructionError("heuristic", "no colouring found", "search-exhausted");
  }

  res.coloring = Finalize(g, std::move(classes), ctx.trace);
  res.colors = res.coloring.colors;
  res.optimal = res.method == "oracle" || res.colors == res.lower_bound;
  rec.set("method", res.method).set("colors", res.colors);
  res.trace = std::move(ctx.trace);
  return res;
}

}  // namespace mgcolor
