#include "flow.hpp"

#include <algorithm>
#include <limits>

namespace mgcolor::detail {

namespace {
constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
}

MaxFlow::MaxFlow(int nodes) : out_(static_cast<std::size_t>(nodes)) {}

int MaxFlow::AddEdge(int from, int to, std::int64_t cap) {
  const int id = static_cast<int>(arcs_.size());
  arcs_.push_back({to, cap, cap});
  out_[static_cast<std::size_t>(from)].push_back(id);
  arcs_.push_back({from, 0, 0});
  out_[static_cast<std::size_t>(to)].push_back(id + 1);
  return id;
}

std::int64_t MaxFlow::Flow(int edge) const {
  const Arc& a = arcs_[static_cast<std::size_t>(edge)];
  return a.original - a.cap;
}

bool MaxFlow::Bfs(int s, int t) {
  level_.assign(out_.size(), -1);
  std::vector<int> queue{s};
  level_[static_cast<std::size_t>(s)] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int v = queue[i];
    for (int id : out_[static_cast<std::size_t>(v)]) {
      const Arc& a = arcs_[static_cast<std::size_t>(id)];
      if (a.cap > 0 && level_[static_cast<std::size_t>(a.to)] < 0) {
        level_[static_cast<std::size_t>(a.to)] = level_[static_cast<std::size_t>(v)] + 1;
        queue.push_back(a.to);
      }
    }
  }
  return level_[static_cast<std::size_t>(t)] >= 0;
}

std::int64_t MaxFlow::Dfs(int v, int t, std::int64_t pushed) {
  if (v == t || pushed == 0) return pushed;
  auto& i = it_[static_cast<std::size_t>(v)];
  const auto& out = out_[static_cast<std::size_t>(v)];
  for (; i < out.size(); ++i) {
    const int id = out[i];
    Arc& a = arcs_[static_cast<std::size_t>(id)];
    if (a.cap <= 0 || level_[static_cast<std::size_t>(a.to)] != level_[static_cast<std::size_t>(v)] + 1) continue;
    const std::int64_t got = Dfs(a.to, t, std::min(pushed, a.cap));
    if (got > 0) {
      a.cap -= got;
      arcs_[static_cast<std::size_t>(id ^ 1)].cap += got;
      return got;
    }
  }
  return 0;
}

std::int64_t MaxFlow::Run(int source, int sink) {
  std::int64_t total = 0;
  while (Bfs(source, sink)) {
    it_.assign(out_.size(), 0);
    while (const std::int64_t got = Dfs(source, sink, kInf)) total += got;
  }
  return total;
}

BoundedFlow::BoundedFlow(int nodes)
    : nodes_(nodes), net_(nodes + 2), excess_(static_cast<std::size_t>(nodes), 0) {}

int BoundedFlow::AddEdge(int from, int to, std::int64_t lo, std::int64_t hi) {
  const int id = static_cast<int>(id_.size());
  id_.push_back(net_.AddEdge(from, to, hi - lo));
  lower_.push_back(lo);
  excess_[static_cast<std::size_t>(to)] += lo;
  excess_[static_cast<std::size_t>(from)] -= lo;
  return id;
}

bool BoundedFlow::Feasible(int source, int sink) {
  const int ss = nodes_;
  const int tt = nodes_ + 1;
  net_.AddEdge(sink, source, kInf);
  std::int64_t need = 0;
  for (int v = 0; v < nodes_; ++v) {
    const std::int64_t e = excess_[static_cast<std::size_t>(v)];
    if (e > 0) {
      net_.AddEdge(ss, v, e);
      need += e;
    } else if (e < 0) {
      net_.AddEdge(v, tt, -e);
    }
  }
  return net_.Run(ss, tt) == need;
}

std::int64_t BoundedFlow::Flow(int edge) const {
  return lower_[static_cast<std::size_t>(edge)] + net_.Flow(id_[static_cast<std::size_t>(edge)]);
}

}  // namespace mgcolor::detail
