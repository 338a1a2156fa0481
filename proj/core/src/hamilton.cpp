#include "mgcolor/hamilton.hpp"

#include <algorithm>
#include <numeric>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include "mgcolor/error.hpp"
#include "mgcolor/rng.hpp"

namespace mgcolor {

const char* to_string(HamiltonStatus s) {
  switch (s) {
    case HamiltonStatus::kFound:
      return "found";
    case HamiltonStatus::kNone:
      return "none";
    case HamiltonStatus::kTimeout:
      return "timeout";
  }
  return "timeout";
}

std::vector<EdgeCopy> HamiltonResult::edges() const {
  std::vector<EdgeCopy> out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    out.emplace_back(order[i], order[(i + 1) % order.size()], 0);
  }
  return out;
}

namespace {

// Simple graph on local ids 0..m-1.
struct Local {
  int m = 0;
  std::vector<int> ids;
  std::vector<std::vector<char>> adj;
  std::vector<std::vector<int>> nb;

  Local(const Multigraph& g, std::span<const int> vertices) : m(static_cast<int>(vertices.size())) {
    ids.assign(vertices.begin(), vertices.end());
    std::sort(ids.begin(), ids.end());
    adj.assign(static_cast<std::size_t>(m), std::vector<char>(static_cast<std::size_t>(m), 0));
    nb.resize(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        if (i != j && g.mult(ids[static_cast<std::size_t>(i)], ids[static_cast<std::size_t>(j)]) > 0) {
          adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
          nb[static_cast<std::size_t>(i)].push_back(j);
        }
      }
    }
  }

  bool Edge(int a, int b) const { return adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] != 0; }
  int Degree(int a) const { return static_cast<int>(nb[static_cast<std::size_t>(a)].size()); }
};

std::vector<int> Closure(const Local& h) {
  const int m = h.m;
  auto at = [m](int a, int b) { return static_cast<std::size_t>(a) * static_cast<std::size_t>(m) + static_cast<std::size_t>(b); };
  std::vector<int> stamp(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), -1);
  std::vector<int> deg(static_cast<std::size_t>(m));
  for (int a = 0; a < m; ++a) {
    deg[static_cast<std::size_t>(a)] = h.Degree(a);
    for (int b : h.nb[static_cast<std::size_t>(a)]) stamp[at(a, b)] = 0;
  }
  struct Added {
    int a, b;
  };
  std::vector<Added> added;
  for (bool changed = true; changed;) {
    changed = false;
    for (int a = 0; a < m; ++a) {
      for (int b = a + 1; b < m; ++b) {
        if (stamp[at(a, b)] >= 0) continue;
        if (deg[static_cast<std::size_t>(a)] + deg[static_cast<std::size_t>(b)] < m) continue;
        added.push_back({a, b});
        stamp[at(a, b)] = stamp[at(b, a)] = static_cast<int>(added.size());
        ++deg[static_cast<std::size_t>(a)];
        ++deg[static_cast<std::size_t>(b)];
        changed = true;
      }
    }
  }
  for (int d : deg) {
    if (d != m - 1) return {};
  }
  std::vector<int> cyc(static_cast<std::size_t>(m));
  std::iota(cyc.begin(), cyc.end(), 0);
  for (int t = static_cast<int>(added.size()); t >= 1; --t) {
    const auto [a, b] = added[static_cast<std::size_t>(t - 1)];
    auto present = [&](int x, int y) {
      const int s = stamp[at(x, y)];
      return s >= 0 && s < t;
    };
    const auto pa = static_cast<std::size_t>(std::find(cyc.begin(), cyc.end(), a) - cyc.begin());
    const std::size_t next = (pa + 1) % cyc.size();
    const std::size_t prev = (pa + cyc.size() - 1) % cyc.size();
    std::vector<int> path;
    if (cyc[next] == b) {
      // path a = x0 ... x_{m-1} = b, running backwards from a
      for (std::size_t k = 0; k < cyc.size(); ++k) path.push_back(cyc[(pa + cyc.size() - k) % cyc.size()]);
    } else if (cyc[prev] == b) {
      for (std::size_t k = 0; k < cyc.size(); ++k) path.push_back(cyc[(pa + k) % cyc.size()]);
    } else {
      continue;
    }
    bool done = false;
    for (int i = 1; i + 2 < m && !done; ++i) {
      const auto si = static_cast<std::size_t>(i);
      if (present(path[0], path[si + 1]) && present(path[si], path.back())) {
        std::reverse(path.begin() + i + 1, path.end());
        done = true;
      }
    }
    if (!done) return {};
    cyc = std::move(path);
  }
  return cyc;
}

std::vector<int> Posa(const Local& h, Rng& rng, std::int64_t steps) {
  const int m = h.m;
  std::vector<int> path{static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(m)))};
  std::vector<char> on(static_cast<std::size_t>(m), 0);
  on[static_cast<std::size_t>(path[0])] = 1;
  for (std::int64_t step = 0; step < steps; ++step) {
    const int end = path.back();
    const auto& nb = h.nb[static_cast<std::size_t>(end)];
    std::vector<int> fresh;
    for (int w : nb) {
      if (!on[static_cast<std::size_t>(w)]) fresh.push_back(w);
    }
    if (!fresh.empty()) {
      const int w = fresh[uniform_below(rng, fresh.size())];
      on[static_cast<std::size_t>(w)] = 1;
      path.push_back(w);
      continue;
    }
    if (static_cast<int>(path.size()) == m && h.Edge(end, path.front())) return path;
    // Rotate around a random neighbour on the path.
    std::vector<std::size_t> pivots;
    for (std::size_t j = 0; j + 2 < path.size(); ++j) {
      if (h.Edge(end, path[j])) pivots.push_back(j);
    }
    if (pivots.empty()) {
      std::reverse(path.begin(), path.end());
      continue;
    }
    const std::size_t j = pivots[uniform_below(rng, pivots.size())];
    std::reverse(path.begin() + static_cast<std::ptrdiff_t>(j) + 1, path.end());
    if (uniform_below(rng, 8) == 0) std::reverse(path.begin(), path.end());
  }
  return {};
}

enum class Search { kFound, kNone, kBudget };

Search Exhaustive(const Local& h, std::int64_t budget, std::vector<int>& out) {
  const int m = h.m;
  std::vector<int> path{0};
  std::vector<char> on(static_cast<std::size_t>(m), 0);
  on[0] = 1;
  std::vector<std::size_t> next{0};
  std::int64_t nodes = 0;
  while (!path.empty()) {
    if (++nodes > budget) return Search::kBudget;
    const int end = path.back();
    if (static_cast<int>(path.size()) == m) {
      if (h.Edge(end, 0)) {
        out = path;
        return Search::kFound;
      }
    }
    auto& i = next.back();
    const auto& nb = h.nb[static_cast<std::size_t>(end)];
    while (i < nb.size() && on[static_cast<std::size_t>(nb[i])]) ++i;
    if (i == nb.size() || static_cast<int>(path.size()) == m) {
      on[static_cast<std::size_t>(end)] = 0;
      path.pop_back();
      next.pop_back();
      if (path.empty()) break;
      continue;
    }
    const int w = nb[i++];
    on[static_cast<std::size_t>(w)] = 1;
    path.push_back(w);
    next.push_back(0);
  }
  return Search::kNone;
}

bool ObviouslyNonHamiltonian(const Local& h) {
  for (int a = 0; a < h.m; ++a) {
    if (h.Degree(a) < 2) return true;
  }
  std::vector<char> seen(static_cast<std::size_t>(h.m), 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (int w : h.nb[static_cast<std::size_t>(queue[i])]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        queue.push_back(w);
      }
    }
  }
  return static_cast<int>(queue.size()) != h.m;
}

HamiltonResult Wrap(const Multigraph& g, const Local& h, const std::vector<int>& local) {
  HamiltonResult r;
  r.status = HamiltonStatus::kFound;
  r.cycle = Multigraph(g.order());
  for (int a : local) r.order.push_back(h.ids[static_cast<std::size_t>(a)]);
  for (std::size_t i = 0; i < r.order.size(); ++i) r.cycle.add(r.order[i], r.order[(i + 1) % r.order.size()]);
  return r;
}

}  // namespace

HamiltonResult hamilton_cycle_on(const Multigraph& g, std::span<const int> vertices,
                                 const HamiltonOptions& options) {
  if (vertices.size() < 3) {
    throw PreconditionError("too-small", "a Hamilton cycle needs at least 3 vertices");
  }
  const Local h(g, vertices);
  HamiltonResult none;
  none.status = HamiltonStatus::kNone;
  if (ObviouslyNonHamiltonian(h)) return none;
  if (auto cyc = Closure(h); !cyc.empty()) return Wrap(g, h, cyc);
  Rng rng(options.seed);
  const std::int64_t steps = 20LL * h.m * h.m + 2000;
  for (int attempt = 0; attempt < options.restarts; ++attempt) {
    if (auto cyc = Posa(h, rng, steps); !cyc.empty()) return Wrap(g, h, cyc);
  }
  if (h.m <= options.exhaustive_cap) {
    std::vector<int> cyc;
    switch (Exhaustive(h, options.node_budget, cyc)) {
      case Search::kFound:
        return Wrap(g, h, cyc);
      case Search::kNone:
        return none;
      case Search::kBudget:
        break;
    }
  }
  return {};
}

HamiltonResult hamilton_cycle(const Multigraph& g, const HamiltonOptions& options) {
  std::vector<int> all(static_cast<std::size_t>(g.order()));
  std::iota(all.begin(), all.end(), 0);
  return hamilton_cycle_on(g, all, options);
}

Multigraph require_hamilton_cycle(const Multigraph& g, const std::string& stage,
                                  const HamiltonOptions& options) {
  HamiltonResult r = hamilton_cycle(g, options);
  if (!r.found()) {
    throw ConstructionError(stage, std::string("Hamilton search: ") + to_string(r.status),
                            "hamilton-failed");
  }
  return std::move(r.cycle);
}

bool dirac_condition(const Multigraph& g) {
  const Multigraph s = underlying_simple(g);
  return g.order() >= 3 && 2 * s.min_degree() >= g.order();
}

bool chvatal_condition(const Multigraph& g) {
  const int n = g.order();
  if (n < 3) return false;
  std::vector<int> d = underlying_simple(g).degrees();
  std::sort(d.begin(), d.end());
  for (int i = 1; 2 * i < n; ++i) {
    if (d[static_cast<std::size_t>(i - 1)] <= i && d[static_cast<std::size_t>(n - i - 1)] < n - i) return false;
  }
  return true;
}

Multigraph perfect_matching_avoiding(const Multigraph& g, std::span<const int> avoid,
                                     const HamiltonOptions& options) {
  const int n = g.order();
  std::vector<char> skip(static_cast<std::size_t>(n), 0);
  for (int v : avoid) skip.at(static_cast<std::size_t>(v)) = 1;
  std::vector<int> active;
  for (int v = 0; v < n; ++v) {
    if (!skip[static_cast<std::size_t>(v)]) active.push_back(v);
  }
  if (active.size() % 2 != 0) {
    throw PreconditionError("odd-count", std::to_string(active.size()) + " vertices remain");
  }
  Multigraph matching(n);
  if (active.empty()) return matching;
  if (active.size() == 2) {
    if (g.mult(active[0], active[1]) == 0) {
      throw ConstructionError("perfect-matching", "the two remaining vertices are not adjacent",
                              "no-matching-found");
    }
    matching.add(active[0], active[1]);
    return matching;
  }
  const HamiltonResult r = hamilton_cycle_on(g, active, options);
  if (r.found()) {
    for (std::size_t i = 0; i + 1 < r.order.size(); i += 2) matching.add(r.order[i], r.order[i + 1]);
    return matching;
  }
  // No cycle found: fall back to a maximum matching.
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  Graph b(active.size());
  for (std::size_t i = 0; i < active.size(); ++i) {
    for (std::size_t j = i + 1; j < active.size(); ++j) {
      if (g.mult(active[i], active[j]) > 0) boost::add_edge(i, j, b);
    }
  }
  std::vector<boost::graph_traits<Graph>::vertex_descriptor> mate(active.size());
  boost::edmonds_maximum_cardinality_matching(b, &mate[0]);
  for (std::size_t i = 0; i < active.size(); ++i) {
    if (mate[i] == boost::graph_traits<Graph>::null_vertex()) {
      throw ConstructionError("perfect-matching", "G - avoid has no perfect matching",
                              "no-matching-found");
    }
    if (i < mate[i]) matching.add(active[i], active[mate[i]]);
  }
  return matching;
}

}  // namespace mgcolor
