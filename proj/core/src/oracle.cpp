#include "mgcolor/oracle.hpp"

#include <map>
#include <vector>

#include "mgcolor/density.hpp"
#include "mgcolor/edge_coloring_search.hpp"
#include "mgcolor/error.hpp"

namespace mgcolor {

namespace {

std::string Name(const EdgeCopy& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + "," + std::to_string(e.copy) + ")";
}

}  // namespace

std::optional<std::string> verify_coloring(const Multigraph& g, const EdgeColoring& c) {
  if (c.colors < 0) return "negative colour count";
  std::map<EdgeCopy, int> seen;
  for (const ColoredEdge& ce : c.edges) {
    const EdgeCopy& e = ce.edge;
    if (e.u < 0 || e.v >= g.order() || e.u == e.v || e.copy < 0 || e.copy >= g.mult(e.u, e.v)) {
      return "edge copy " + Name(e) + " is not in the graph";
    }
    if (ce.color < 1 || ce.color > c.colors) {
      return "edge copy " + Name(e) + " has colour " + std::to_string(ce.color) + " outside [1, " +
             std::to_string(c.colors) + "]";
    }
    if (!seen.emplace(e, ce.color).second) return "edge copy " + Name(e) + " coloured twice";
  }
  for (const Bundle& b : g.bundles()) {
    for (int i = 0; i < b.mult; ++i) {
      if (seen.count(EdgeCopy(b.u, b.v, i)) == 0) {
        return "edge copy " + Name(EdgeCopy(b.u, b.v, i)) + " is uncoloured";
      }
    }
  }
  std::map<std::pair<int, int>, EdgeCopy> at;
  for (const auto& [e, color] : seen) {
    for (int x : {e.u, e.v}) {
      const auto [it, fresh] = at.emplace(std::make_pair(x, color), e);
      if (!fresh) {
        return "vertex " + std::to_string(x) + ": edge copies " + Name(it->second) + " and " + Name(e) +
               " share colour " + std::to_string(color);
      }
    }
  }
  return std::nullopt;
}

OracleResult brute_force_chi(const Multigraph& g, const OracleOptions& options) {
  if (g.edge_count() > options.edge_cap) {
    throw PreconditionError("cap-exceeded", "e(G) = " + std::to_string(g.edge_count()) +
                                                " exceeds the oracle cap " + std::to_string(options.edge_cap));
  }
  OracleResult out;
  int k = g.max_degree();
  if (g.order() >= 3 && g.order() <= 16) k = std::max<int>(k, static_cast<int>(ceil(density_exact(g).chi_f)));
  out.lower_bound = k;
  ExactOptions eo;
  for (;; ++k) {
    eo.node_budget = options.node_budget - out.nodes;
    const ExactResult r = exact_color(g, k, eo);
    out.nodes += r.nodes;
    if (r.status == ExactStatus::kBudget) {
      throw Error(ErrorKind::kConstruction, "oracle-budget",
                  "node budget exhausted while testing K = " + std::to_string(k), "oracle");
    }
    if (r.status == ExactStatus::kColored) {
      out.chi = k;
      out.coloring = coloring_from_classes(r.classes);
      return out;
    }
  }
}

}  // namespace mgcolor
