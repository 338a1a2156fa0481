#include "mgcolor/euler.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "mgcolor/error.hpp"

namespace mgcolor {

namespace {

void RequireEven(const Multigraph& g) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) % 2 != 0) {
      throw PreconditionError("not-even", "vertex " + std::to_string(v) + " has odd degree " +
                                              std::to_string(g.degree(v)));
    }
  }
}

// Remaining multiplicities plus a per-vertex cursor into the ascending
// neighbour list, so the lowest available neighbour is found in amortised O(1).
class Remaining {
 public:
  explicit Remaining(const Multigraph& g) : left_(g), cursor_(static_cast<std::size_t>(g.order()), 0) {
    adj_.reserve(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) adj_.push_back(g.neighbors(v));
  }

  // Lowest neighbour with copies left, or -1.
  int Next(int v) {
    auto& c = cursor_[static_cast<std::size_t>(v)];
    const auto& nb = adj_[static_cast<std::size_t>(v)];
    while (c < nb.size() && left_.mult(v, nb[c]) == 0) ++c;
    return c < nb.size() ? nb[c] : -1;
  }

  EdgeCopy Take(int u, int v) {
    const int m = left_.mult(u, v);
    left_.add(u, v, -1);
    return EdgeCopy(u, v, m - 1);
  }

  const Multigraph& left() const { return left_; }

 private:
  Multigraph left_;
  std::vector<std::size_t> cursor_;
  std::vector<std::vector<int>> adj_;
};

Trail Hierholzer(const Multigraph& g, int start) {
  Remaining rem(g);
  struct Frame {
    int vertex;
    EdgeCopy via;
  };
  std::vector<Frame> stack{{start, EdgeCopy{}}};
  std::vector<Frame> out;
  while (!stack.empty()) {
    const int x = stack.back().vertex;
    const int y = rem.Next(x);
    if (y < 0) {
      out.push_back(stack.back());
      stack.pop_back();
    } else {
      stack.push_back({y, rem.Take(x, y)});
    }
  }
  std::reverse(out.begin(), out.end());
  Trail t;
  t.vertices.push_back(out.front().vertex);
  for (std::size_t i = 1; i < out.size(); ++i) {
    t.vertices.push_back(out[i].vertex);
    t.edges.push_back(out[i].via);
  }
  if (rem.left().edge_count() != 0) {
    throw PreconditionError("disconnected", "more than one non-trivial component");
  }
  return t;
}

}  // namespace

bool is_valid_trail(const Trail& t, const Multigraph& g) {
  if (t.vertices.size() != t.edges.size() + 1) return false;
  std::set<EdgeCopy> seen;
  for (std::size_t i = 0; i < t.edges.size(); ++i) {
    const EdgeCopy& e = t.edges[i];
    const EdgeCopy want(t.vertices[i], t.vertices[i + 1], e.copy);
    if (!(want == e) || e.u == e.v) return false;
    if (e.copy < 0 || e.copy >= g.mult(e.u, e.v)) return false;
    if (!seen.insert(e).second) return false;
  }
  return true;
}

Multigraph trail_graph(const Trail& t, int order) {
  Multigraph h(order);
  for (const EdgeCopy& e : t.edges) h.add(e.u, e.v);
  return h;
}

Trail euler_tour(const Multigraph& g) {
  RequireEven(g);
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) > 0) return Hierholzer(g, v);
  }
  Trail t;
  if (g.order() > 0) t.vertices.push_back(0);
  return t;
}

Trail euler_tour_from(const Multigraph& g, int start) {
  RequireEven(g);
  if (start < 0 || start >= g.order() || g.degree(start) == 0) {
    throw PreconditionError("bad-start", "vertex " + std::to_string(start) +
                                             " is not on a non-trivial component");
  }
  return Hierholzer(g, start);
}

namespace {

// Finds a cycle in a simple remaining graph by DFS; empty if it is a forest.
std::vector<int> FindCycle(const Multigraph& h) {
  const int n = h.order();
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> state(static_cast<std::size_t>(n), 0);
  for (int root = 0; root < n; ++root) {
    if (state[static_cast<std::size_t>(root)] != 0 || h.degree(root) == 0) continue;
    struct Item {
      int v;
      std::vector<int> nb;
      std::size_t i;
    };
    std::vector<Item> stack;
    stack.push_back({root, h.neighbors(root), 0});
    state[static_cast<std::size_t>(root)] = 1;
    while (!stack.empty()) {
      Item& top = stack.back();
      if (top.i == top.nb.size()) {
        state[static_cast<std::size_t>(top.v)] = 2;
        stack.pop_back();
        continue;
      }
      const int w = top.nb[top.i++];
      if (w == parent[static_cast<std::size_t>(top.v)]) continue;
      if (state[static_cast<std::size_t>(w)] == 1) {
        std::vector<int> cyc;
        for (int x = top.v; x != w; x = parent[static_cast<std::size_t>(x)]) cyc.push_back(x);
        cyc.push_back(w);
        std::reverse(cyc.begin(), cyc.end());
        return cyc;
      }
      if (state[static_cast<std::size_t>(w)] == 0) {
        parent[static_cast<std::size_t>(w)] = top.v;
        state[static_cast<std::size_t>(w)] = 1;
        stack.push_back({w, h.neighbors(w), 0});
      }
    }
  }
  return {};
}

Trail Consume(Multigraph& left, const std::vector<int>& walk) {
  Trail t;
  t.vertices.push_back(walk.front());
  for (std::size_t i = 1; i < walk.size(); ++i) {
    const int a = walk[i - 1];
    const int b = walk[i];
    const int m = left.mult(a, b);
    left.add(a, b, -1);
    t.edges.emplace_back(a, b, m - 1);
    t.vertices.push_back(b);
  }
  return t;
}

}  // namespace

CyclePathDecomposition cycle_path_decompose(const Multigraph& g) {
  CyclePathDecomposition out;
  Multigraph left = g;
  for (const Bundle& b : g.bundles()) {
    for (int k = 0; k + 1 < b.mult; k += 2) out.cycles.push_back(Consume(left, {b.u, b.v, b.u}));
  }
  for (;;) {
    std::vector<int> cyc = FindCycle(left);
    if (cyc.empty()) break;
    cyc.push_back(cyc.front());
    out.cycles.push_back(Consume(left, cyc));
  }
  // Leftover forest: pair each odd vertex with another odd vertex of its tree.
  const int n = left.order();
  for (;;) {
    int a = -1;
    for (int v = 0; v < n && a < 0; ++v) {
      if (left.degree(v) % 2 != 0) a = v;
    }
    if (a < 0) break;
    std::vector<int> parent(static_cast<std::size_t>(n), -2);
    std::vector<int> queue{a};
    parent[static_cast<std::size_t>(a)] = -1;
    int b = -1;
    for (std::size_t qi = 0; qi < queue.size() && b < 0; ++qi) {
      for (int w : left.neighbors(queue[qi])) {
        if (parent[static_cast<std::size_t>(w)] != -2) continue;
        parent[static_cast<std::size_t>(w)] = queue[qi];
        if (left.degree(w) % 2 != 0) {
          b = w;
          break;
        }
        queue.push_back(w);
      }
    }
    if (b < 0) throw ConstructionError("cycle-path", "odd vertex without partner in its tree");
    std::vector<int> walk;
    for (int x = b; x != -1; x = parent[static_cast<std::size_t>(x)]) walk.push_back(x);
    std::reverse(walk.begin(), walk.end());
    out.paths.push_back(Consume(left, walk));
  }
  if (left.edge_count() != 0) throw ConstructionError("cycle-path", "edges left over");
  return out;
}

Multigraph bounded_spanning_forest(const Multigraph& g) {
  RequireEven(g);
  const int n = g.order();
  Multigraph forest(n);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int root = 0; root < n; ++root) {
    if (seen[static_cast<std::size_t>(root)] || g.degree(root) == 0) continue;
    // Tour of this component only: restrict to the vertices reachable from root.
    std::vector<int> comp{root};
    std::vector<bool> in(static_cast<std::size_t>(n), false);
    in[static_cast<std::size_t>(root)] = true;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (int w : g.neighbors(comp[i])) {
        if (!in[static_cast<std::size_t>(w)]) {
          in[static_cast<std::size_t>(w)] = true;
          comp.push_back(w);
        }
      }
    }
    Multigraph part(n);
    for (int x : comp) {
      for (int w : g.neighbors(x)) {
        if (x < w) part.set_mult(x, w, g.mult(x, w));
      }
    }
    const Trail t = euler_tour_from(part, root);
    seen[static_cast<std::size_t>(root)] = true;
    for (std::size_t i = 0; i + 1 < t.vertices.size(); ++i) {
      const int y = t.vertices[i + 1];
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = true;
        forest.add(t.vertices[i], y);
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    if (2 * forest.degree(v) > 2 + g.degree(v)) {
      throw ConstructionError("spanning-forest", "degree bound violated at vertex " +
                                                     std::to_string(v));
    }
  }
  return forest;
}

}  // namespace mgcolor
