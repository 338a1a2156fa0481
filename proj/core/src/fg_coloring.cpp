#include "mgcolor/fg_coloring.hpp"

#include <algorithm>
#include <numeric>

#include "flow.hpp"
#include "mgcolor/error.hpp"
#include "mgcolor/euler.hpp"

namespace mgcolor {

FGSpec FGSpec::uniform(int order, int f, int g) {
  FGSpec s;
  s.f.assign(static_cast<std::size_t>(order), f);
  s.g_default = g;
  return s;
}

int FGSpec::g(int u, int v) const {
  if (u > v) std::swap(u, v);
  const auto it = g_override.find({u, v});
  return it == g_override.end() ? g_default : it->second;
}

void FGSpec::set_g(int u, int v, int value) {
  if (u > v) std::swap(u, v);
  g_override[{u, v}] = value;
}

namespace {

int CeilDiv(int a, int b) { return (a + b - 1) / b; }

void RequireSpec(const Multigraph& g, const FGSpec& spec) {
  if (static_cast<int>(spec.f.size()) != g.order()) {
    throw PreconditionError("bad-spec", "f must have one entry per vertex");
  }
  for (int v = 0; v < g.order(); ++v) {
    if (spec.f[static_cast<std::size_t>(v)] < 1) {
      throw PreconditionError("bad-spec", "f(" + std::to_string(v) + ") < 1");
    }
  }
  for (const Bundle& b : g.bundles()) {
    if (spec.g(b.u, b.v) < 1) {
      throw PreconditionError("bad-spec", "g < 1 on a bundle");
    }
  }
}

}  // namespace

int fg_bound(const Multigraph& g, const FGSpec& spec) {
  RequireSpec(g, spec);
  int k = 0;
  for (int v = 0; v < g.order(); ++v) k = std::max(k, CeilDiv(g.degree(v), spec.f[static_cast<std::size_t>(v)]));
  for (const Bundle& b : g.bundles()) k = std::max(k, CeilDiv(b.mult, spec.g(b.u, b.v)));
  return k;
}

std::optional<std::string> check_fg_coloring(const Multigraph& g, const FGSpec& spec,
                                             const std::vector<Multigraph>& classes) {
  Multigraph sum(g.order());
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const Multigraph& h = classes[c];
    if (h.order() != g.order()) return "colour " + std::to_string(c + 1) + " has wrong order";
    for (int v = 0; v < g.order(); ++v) {
      if (h.degree(v) > spec.f[static_cast<std::size_t>(v)]) {
        return "colour " + std::to_string(c + 1) + " exceeds f at vertex " + std::to_string(v);
      }
    }
    for (const Bundle& b : h.bundles()) {
      if (b.mult > spec.g(b.u, b.v)) {
        return "colour " + std::to_string(c + 1) + " exceeds g on " + std::to_string(b.u) + "-" +
               std::to_string(b.v);
      }
    }
    sum = combined(sum, h);
  }
  if (!(sum == g)) return "classes do not partition the graph";
  return std::nullopt;
}

std::vector<Multigraph> fg_classes_bipartite(const Multigraph& h, const FGSpec& spec,
                                             const Bipartition& parts,
                                             std::optional<int> colors) {
  const int n = h.order();
  if (static_cast<int>(parts.side.size()) != n) {
    throw PreconditionError("not-bipartite", "bipartition has the wrong size");
  }
  for (const Bundle& b : h.bundles()) {
    if (parts.side[static_cast<std::size_t>(b.u)] == parts.side[static_cast<std::size_t>(b.v)]) {
      throw PreconditionError("not-bipartite", "edge " + std::to_string(b.u) + "-" +
                                                   std::to_string(b.v) + " inside one part");
    }
  }
  const int bound = fg_bound(h, spec);
  const int k_total = colors.value_or(bound);
  if (k_total < bound) {
    throw PreconditionError("too-few-colors", std::to_string(k_total) + " < " + std::to_string(bound));
  }
  std::vector<Multigraph> classes;
  Multigraph left = h;
  // Peel one class at a time. With k classes to go, mult <= k g and d <= k f
  // hold, so the uniform 1/k split is a fractional solution and an integral
  // one exists.
  for (int k = k_total; k >= 1; --k) {
    const int source = n;
    const int sink = n + 1;
    detail::BoundedFlow flow(n + 2);
    for (int v = 0; v < n; ++v) {
      const int d = left.degree(v);
      const int f = spec.f[static_cast<std::size_t>(v)];
      const int lo = std::max(0, d - (k - 1) * f);
      const int hi = std::min(f, d);
      if (parts.side[static_cast<std::size_t>(v)] == 0) {
        flow.AddEdge(source, v, lo, hi);
      } else {
        flow.AddEdge(v, sink, lo, hi);
      }
    }
    std::vector<std::pair<Bundle, int>> arcs;
    for (const Bundle& b : left.bundles()) {
      const int g = spec.g(b.u, b.v);
      const int lo = std::max(0, b.mult - (k - 1) * g);
      const int hi = std::min(g, b.mult);
      const bool forward = parts.side[static_cast<std::size_t>(b.u)] == 0;
      arcs.emplace_back(b, forward ? flow.AddEdge(b.u, b.v, lo, hi) : flow.AddEdge(b.v, b.u, lo, hi));
    }
    if (!flow.Feasible(source, sink)) {
      throw ConstructionError("fg-bipartite", "no feasible colour class with " +
                                                  std::to_string(k) + " colours left");
    }
    Multigraph cls(n);
    for (const auto& [b, id] : arcs) {
      const auto x = static_cast<int>(flow.Flow(id));
      if (x > 0) cls.add(b.u, b.v, x);
    }
    left = remove_layer(left, cls);
    classes.push_back(std::move(cls));
  }
  if (left.edge_count() != 0) throw ConstructionError("fg-bipartite", "edges left uncoloured");
  return classes;
}

EdgeColoring fg_color_bipartite(const Multigraph& h, const FGSpec& spec, const Bipartition& parts) {
  const auto classes = fg_classes_bipartite(h, spec, parts);
  return coloring_from_classes(classes);
}

int Orientation::out_degree(int v) const {
  int s = 0;
  for (int w = 0; w < order; ++w) s += arc(v, w);
  return s;
}

int Orientation::in_degree(int v) const {
  int s = 0;
  for (int w = 0; w < order; ++w) s += arc(w, v);
  return s;
}

Multigraph Orientation::underlying() const {
  Multigraph g(order);
  for (int u = 0; u < order; ++u) {
    for (int v = u + 1; v < order; ++v) {
      if (arc(u, v) + arc(v, u) > 0) g.set_mult(u, v, arc(u, v) + arc(v, u));
    }
  }
  return g;
}

namespace {

// Orients the odd bundles, one copy each, along Euler tours; a dummy vertex
// absorbs odd degrees. Returns the arcs as an Orientation on g.order().
void EulerOrient(const Multigraph& single, Orientation& d) {
  const int n = single.order();
  Multigraph aux = with_extra_vertices(single, 1);
  for (int v = 0; v < n; ++v) {
    if (single.degree(v) % 2 != 0) aux.add(v, n);
  }
  std::vector<char> done(static_cast<std::size_t>(n + 1), 0);
  for (int root = 0; root <= n; ++root) {
    if (done[static_cast<std::size_t>(root)] || aux.degree(root) == 0) continue;
    Multigraph part(n + 1);
    std::vector<int> comp{root};
    done[static_cast<std::size_t>(root)] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (int w : aux.neighbors(comp[i])) {
        if (comp[i] < w) part.set_mult(comp[i], w, aux.mult(comp[i], w));
        if (!done[static_cast<std::size_t>(w)]) {
          done[static_cast<std::size_t>(w)] = 1;
          comp.push_back(w);
        }
      }
    }
    const Trail t = euler_tour_from(part, root);
    for (std::size_t i = 0; i + 1 < t.vertices.size(); ++i) {
      const int a = t.vertices[i];
      const int b = t.vertices[i + 1];
      if (a != n && b != n) d.add_arc(a, b);
    }
  }
}

}  // namespace

std::vector<Multigraph> fg_classes_even(const Multigraph& g, const FGSpec& spec,
                                        std::optional<int> colors) {
  RequireSpec(g, spec);
  const int n = g.order();
  for (int v = 0; v < n; ++v) {
    if (spec.f[static_cast<std::size_t>(v)] % 2 != 0) {
      throw PreconditionError("parity", "f(" + std::to_string(v) + ") is odd");
    }
  }
  for (const Bundle& b : g.bundles()) {
    if (spec.g(b.u, b.v) % 2 != 0) {
      throw PreconditionError("parity", "g is odd on " + std::to_string(b.u) + "-" + std::to_string(b.v));
    }
  }
  const int k = colors.value_or(fg_bound(g, spec));
  Orientation d(n);
  Multigraph odd(n);
  for (const Bundle& b : g.bundles()) {
    d.add_arc(b.u, b.v, b.mult / 2);
    d.add_arc(b.v, b.u, b.mult / 2);
    if (b.mult % 2 != 0) odd.add(b.u, b.v);
  }
  EulerOrient(odd, d);
  const DoubleCover cover = double_cover(d);
  FGSpec half;
  half.f.resize(static_cast<std::size_t>(2 * n));
  for (int v = 0; v < n; ++v) {
    half.f[static_cast<std::size_t>(v)] = half.f[static_cast<std::size_t>(v + n)] =
        std::max(1, spec.f[static_cast<std::size_t>(v)] / 2);
  }
  half.g_default = 1;
  for (const Bundle& b : cover.graph.bundles()) {
    const int u = b.u;
    const int v = b.v - n;
    half.set_g(b.u, b.v, std::max(1, spec.g(u, v) / 2));
  }
  const auto cover_classes = fg_classes_bipartite(cover.graph, half, cover.parts, k);
  std::vector<Multigraph> classes;
  classes.reserve(cover_classes.size());
  for (const Multigraph& c : cover_classes) classes.push_back(collapse_cover(c, n));
  if (auto bad = check_fg_coloring(g, spec, classes)) throw ConstructionError("fg-even", *bad);
  return classes;
}

EdgeColoring fg_color_even(const Multigraph& g, const FGSpec& spec) {
  const auto classes = fg_classes_even(g, spec);
  return coloring_from_classes(classes);
}

Orientation orient_doubled(const Multigraph& g) {
  const int n = g.order();
  Orientation d(n);
  Multigraph singles(n);
  for (const Bundle& b : g.bundles()) {
    if (b.mult >= 2) {
      d.add_arc(b.u, b.v, b.mult);
      d.add_arc(b.v, b.u, b.mult);
    } else {
      singles.add(b.u, b.v);
    }
  }
  const CyclePathDecomposition parts = cycle_path_decompose(singles);
  for (const Trail& c : parts.cycles) {
    for (std::size_t i = 0; i + 1 < c.vertices.size(); ++i) d.add_arc(c.vertices[i], c.vertices[i + 1], 2);
  }
  for (const Trail& p : parts.paths) {
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
      d.add_arc(p.vertices[i], p.vertices[i + 1]);
      d.add_arc(p.vertices[i + 1], p.vertices[i]);
      d.singleton_pairs.add(p.vertices[i], p.vertices[i + 1]);
    }
  }
  return d;
}

std::optional<std::string> check_orientation(const Orientation& d, const Multigraph& source,
                                             int max_arcs) {
  const int n = d.order;
  if (!(d.underlying() == doubled(source))) return "arcs do not orient the doubled graph";
  for (int v = 0; v < n; ++v) {
    if (d.in_degree(v) != d.out_degree(v)) return "unbalanced at vertex " + std::to_string(v);
    for (int w = 0; w < n; ++w) {
      if (d.arc(v, w) > max_arcs) {
        return "more than " + std::to_string(max_arcs) + " arcs " + std::to_string(v) + "->" +
               std::to_string(w);
      }
    }
  }
  for (const Bundle& b : d.singleton_pairs.bundles()) {
    if (source.mult(b.u, b.v) != 1) return "paired arcs on a non-singleton edge";
    if (d.arc(b.u, b.v) != 1 || d.arc(b.v, b.u) != 1) return "singleton pair is not a 2-cycle";
  }
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const Bundle& b : d.singleton_pairs.bundles()) {
    const int a = find(b.u);
    const int c = find(b.v);
    if (a == c) return "singleton pairs contain a cycle";
    parent[static_cast<std::size_t>(a)] = c;
  }
  return std::nullopt;
}

DoubleCover double_cover(const Orientation& d) {
  const int n = d.order;
  DoubleCover out{Multigraph(2 * n), {}};
  out.parts.side.assign(static_cast<std::size_t>(2 * n), 1);
  std::fill(out.parts.side.begin(), out.parts.side.begin() + n, 0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (d.arc(u, v) > 0) out.graph.add(u, v + n, d.arc(u, v));
    }
  }
  return out;
}

Multigraph collapse_cover(const Multigraph& cover_class, int order) {
  Multigraph g(order);
  for (const Bundle& b : cover_class.bundles()) {
    if (b.u >= order || b.v < order) {
      throw PreconditionError("not-bipartite", "edge inside one side of the cover");
    }
    g.add(b.u, b.v - order, b.mult);
  }
  return g;
}

}  // namespace mgcolor
