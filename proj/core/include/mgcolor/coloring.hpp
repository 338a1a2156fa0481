#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mgcolor/multigraph.hpp"

namespace mgcolor {

struct ColoredEdge {
  EdgeCopy edge;
  int color = 0;  // 1-based

  friend bool operator==(const ColoredEdge&, const ColoredEdge&) = default;
};

// Assignment of a colour in [1, colors] to edge copies, sorted by EdgeCopy.
struct EdgeColoring {
  int colors = 0;
  std::vector<ColoredEdge> edges;

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;
};

// Names the parallel copies used by each layer of an edge partition. The first
// layer receives the highest copy indices of every bundle, the next layer the
// highest of what is left, and so on, so indices stay stable as layers are
// peeled off in order.
std::vector<std::vector<EdgeCopy>> assign_copies(std::span<const Multigraph> layers);

// Colour i+1 for every edge of classes[i]. The coloured graph is the sum of
// the classes.
EdgeColoring coloring_from_classes(std::span<const Multigraph> classes);

// One spanning sub-multigraph per colour (index c-1 holds colour c).
std::vector<Multigraph> color_classes(const EdgeColoring& coloring, int order);

enum class LayerKind { kMatching, kHamiltonCycle, kSimpleRegular, kResidual };

struct Layer {
  LayerKind kind = LayerKind::kResidual;
  int degree = 0;  // only meaningful for kSimpleRegular
  Multigraph graph;
};

std::string layer_label(const Layer& layer);

// Ordered, edge-disjoint layers whose union is the source graph.
struct Decomposition {
  std::vector<Layer> layers;
};

struct LayerCensus {
  int matchings = 0;
  int hamilton_cycles = 0;
  // (degree, count) in ascending degree order
  std::vector<std::pair<int, int>> simple_regular;
  int residual = 0;

  friend bool operator==(const LayerCensus&, const LayerCensus&) = default;
};

LayerCensus census(const Decomposition& d);

// First violated property, or nullopt: label predicates, edge-disjointness and
// exact partition of `source`.
std::optional<std::string> check_decomposition(const Multigraph& source,
                                               const Decomposition& d);

// A 1-factorization of a regular multigraph.
struct FactorizationCertificate {
  std::vector<Multigraph> matchings;
  Multigraph source;
};

std::optional<std::string> check_factorization(const FactorizationCertificate& cert);

}  // namespace mgcolor
