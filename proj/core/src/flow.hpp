#pragma once

#include <cstdint>
#include <vector>

namespace mgcolor::detail {

// Dinic max-flow.
class MaxFlow {
 public:
  explicit MaxFlow(int nodes);
  int AddEdge(int from, int to, std::int64_t cap);
  std::int64_t Run(int source, int sink);
  std::int64_t Flow(int edge) const;

 private:
  struct Arc {
    int to;
    std::int64_t cap;
    std::int64_t original;
  };
  bool Bfs(int s, int t);
  std::int64_t Dfs(int v, int t, std::int64_t pushed);

  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_;
  std::vector<int> level_;
  std::vector<std::size_t> it_;
};

// s-t flow with lower and upper bounds on every arc.
class BoundedFlow {
 public:
  explicit BoundedFlow(int nodes);
  int AddEdge(int from, int to, std::int64_t lo, std::int64_t hi);
  // Finds any feasible flow; false if none exists.
  bool Feasible(int source, int sink);
  std::int64_t Flow(int edge) const;

 private:
  int nodes_;
  MaxFlow net_;
  std::vector<std::int64_t> excess_;
  std::vector<std::int64_t> lower_;
  std::vector<int> id_;
};

}  // namespace mgcolor::detail
