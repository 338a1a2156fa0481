#include "mgcolor/coloring.hpp"

#include <algorithm>
#include <map>

#include "mgcolor/error.hpp"

namespace mgcolor {

std::vector<std::vector<EdgeCopy>> assign_copies(std::span<const Multigraph> layers) {
  std::vector<std::vector<EdgeCopy>> out(layers.size());
  if (layers.empty()) return out;
  const int n = layers.front().order();
  Multigraph total(n);
  for (const Multigraph& layer : layers) total = combined(total, layer);
  // Remaining copies per bundle; each layer takes from the top.
  Multigraph remaining = total;
  for (std::size_t i = 0; i < layers.size(); ++i) {
    for (const Bundle& b : layers[i].bundles()) {
      int top = remaining.mult(b.u, b.v);
      for (int c = 0; c < b.mult; ++c) out[i].emplace_back(b.u, b.v, --top);
      remaining.set_mult(b.u, b.v, top);
    }
    std::sort(out[i].begin(), out[i].end());
  }
  return out;
}

EdgeColoring coloring_from_classes(std::span<const Multigraph> classes) {
  EdgeColoring coloring;
  coloring.colors = static_cast<int>(classes.size());
  const auto copies = assign_copies(classes);
  for (std::size_t i = 0; i < copies.size(); ++i) {
    for (const EdgeCopy& e : copies[i]) {
      coloring.edges.push_back({e, static_cast<int>(i) + 1});
    }
  }
  std::sort(coloring.edges.begin(), coloring.edges.end(),
            [](const ColoredEdge& a, const ColoredEdge& b) { return a.edge < b.edge; });
  return coloring;
}

std::vector<Multigraph> color_classes(const EdgeColoring& coloring, int order) {
  std::vector<Multigraph> classes(static_cast<std::size_t>(coloring.colors),
                                  Multigraph(order));
  for (const ColoredEdge& ce : coloring.edges) {
    if (ce.color < 1 || ce.color > coloring.colors) {
      throw PreconditionError("bad-color", "colour outside [1, K]");
    }
    classes[static_cast<std::size_t>(ce.color - 1)].add(ce.edge.u, ce.edge.v, 1);
  }
  return classes;
}

std::string layer_label(const Layer& layer) {
  switch (layer.kind) {
    case LayerKind::kMatching:
      return "matching";
    case LayerKind::kHamiltonCycle:
      return "hamilton-cycle";
    case LayerKind::kSimpleRegular:
      return "simple-regular(" + std::to_string(layer.degree) + ")";
    case LayerKind::kResidual:
      return "residual";
  }
  return "residual";
}

LayerCensus census(const Decomposition& d) {
  LayerCensus c;
  std::map<int, int> simple;
  for (const Layer& layer : d.layers) {
    switch (layer.kind) {
      case LayerKind::kMatching:
        ++c.matchings;
        break;
      case LayerKind::kHamiltonCycle:
        ++c.hamilton_cycles;
        break;
      case LayerKind::kSimpleRegular:
        ++simple[layer.degree];
        break;
      case LayerKind::kResidual:
        ++c.residual;
        break;
    }
  }
  c.simple_regular.assign(simple.begin(), simple.end());
  return c;
}

namespace {

bool IsSimpleRegular(const Multigraph& g, int d) {
  if (!g.is_simple()) return false;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) != d) return false;
  }
  return true;
}

}  // namespace

std::optional<std::string> check_decomposition(const Multigraph& source,
                                               const Decomposition& d) {
  Multigraph total(source.order());
  for (std::size_t i = 0; i < d.layers.size(); ++i) {
    const Layer& layer = d.layers[i];
    const std::string where = "layer " + std::to_string(i) + " (" + layer_label(layer) + ")";
    if (layer.graph.order() != source.order()) return where + ": wrong vertex set";
    switch (layer.kind) {
      case LayerKind::kMatching:
        if (!is_perfect_matching(layer.graph)) return where + ": not a perfect matching";
        break;
      case LayerKind::kHamiltonCycle:
        if (!is_hamilton_cycle(layer.graph)) return where + ": not a Hamilton cycle";
        break;
      case LayerKind::kSimpleRegular:
        if (!IsSimpleRegular(layer.graph, layer.degree)) {
          return where + ": not simple " + std::to_string(layer.degree) + "-regular";
        }
        break;
      case LayerKind::kResidual:
        break;
    }
    total = combined(total, layer.graph);
    if (!is_subgraph(total, source)) return where + ": layers overlap or leave the source";
  }
  if (!(total == source)) return "layers do not cover every edge of the source";
  return std::nullopt;
}

std::optional<std::string> check_factorization(const FactorizationCertificate& cert) {
  const Multigraph& g = cert.source;
  if (!g.is_regular()) return "source is not regular";
  const int k = g.order() == 0 ? 0 : g.degree(0);
  if (static_cast<int>(cert.matchings.size()) != k) {
    return "expected " + std::to_string(k) + " matchings, got " +
           std::to_string(cert.matchings.size());
  }
  Decomposition d;
  for (const Multigraph& m : cert.matchings) d.layers.push_back({LayerKind::kMatching, 1, m});
  return check_decomposition(g, d);
}

}  // namespace mgcolor
