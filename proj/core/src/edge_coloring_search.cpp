#include "mgcolor/edge_coloring_search.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <unordered_set>

#include "mgcolor/error.hpp"
#include "mgcolor/rng.hpp"

namespace mgcolor {

namespace {

struct Copy {
  int u;
  int v;
};

// Proper partial colouring with O(1) lookups of the edge holding a colour at
// a vertex.
class Partial {
 public:
  Partial(int n, int colors, std::vector<Copy> edges)
      : colors_(colors),
        edges_(std::move(edges)),
        color_(edges_.size(), -1),
        at_(static_cast<std::size_t>(n) * static_cast<std::size_t>(colors), -1) {}

  int At(int v, int c) const { return at_[Slot(v, c)]; }
  bool Free(int v, int c) const { return At(v, c) < 0; }
  int Color(int e) const { return color_[static_cast<std::size_t>(e)]; }
  const Copy& Edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
  std::size_t Size() const { return edges_.size(); }

  void Set(int e, int c) {
    const Copy& x = Edge(e);
    color_[static_cast<std::size_t>(e)] = c;
    at_[Slot(x.u, c)] = e;
    at_[Slot(x.v, c)] = e;
  }

  void Clear(int e) {
    const int c = Color(e);
    if (c < 0) return;
    const Copy& x = Edge(e);
    at_[Slot(x.u, c)] = -1;
    at_[Slot(x.v, c)] = -1;
    color_[static_cast<std::size_t>(e)] = -1;
  }

  std::vector<int> FreeColors(int v) const {
    std::vector<int> out;
    for (int c = 0; c < colors_; ++c) {
      if (Free(v, c)) out.push_back(c);
    }
    return out;
  }

  // Swaps a and b along the a/b path that starts at v with colour a.
  // Returns the far end of the path.
  int SwapChain(int v, int a, int b) {
    std::vector<int> chain;
    int x = v;
    int want = a;
    for (;;) {
      const int e = At(x, want);
      if (e < 0) break;
      chain.push_back(e);
      const Copy& c = Edge(e);
      x = c.u == x ? c.v : c.u;
      want = want == a ? b : a;
    }
    for (int e : chain) Clear(e);
    for (std::size_t i = 0; i < chain.size(); ++i) Set(chain[i], i % 2 == 0 ? b : a);
    return x;
  }

  // End of the a/b path from v starting with colour a, without changing it.
  int ChainEnd(int v, int a, int b) const {
    int x = v;
    int want = a;
    for (std::size_t steps = 0; steps <= edges_.size(); ++steps) {
      const int e = At(x, want);
      if (e < 0) break;
      const Copy& c = Edge(e);
      x = c.u == x ? c.v : c.u;
      want = want == a ? b : a;
    }
    return x;
  }

 private:
  std::size_t Slot(int v, int c) const {
    return static_cast<std::size_t>(v) * static_cast<std::size_t>(colors_) + static_cast<std::size_t>(c);
  }

  int colors_;
  std::vector<Copy> edges_;
  std::vector<int> color_;
  std::vector<int> at_;
};

std::vector<Copy> Copies(const Multigraph& g) {
  std::vector<Copy> out;
  for (const Bundle& b : g.bundles()) {
    for (int i = 0; i < b.mult; ++i) out.push_back({b.u, b.v});
  }
  return out;
}

bool TryInsert(Partial& p, int e, Rng& rng) {
  const Copy x = p.Edge(e);
  const auto fu = p.FreeColors(x.u);
  const auto fv = p.FreeColors(x.v);
  for (int c : fu) {
    if (p.Free(x.v, c)) {
      p.Set(e, c);
      return true;
    }
  }
  if (fu.empty() || fv.empty()) return false;
  // a free at u, b free at v: flip the a/b chain at v so a frees up there.
  const int a = fu[uniform_below(rng, fu.size())];
  const int b = fv[uniform_below(rng, fv.size())];
  if (p.ChainEnd(x.v, a, b) != x.u) {
    p.SwapChain(x.v, a, b);
    p.Set(e, a);
    return true;
  }
  if (p.ChainEnd(x.u, b, a) != x.v) {
    p.SwapChain(x.u, b, a);
    p.Set(e, b);
    return true;
  }
  return false;
}

}  // namespace

std::optional<std::vector<Multigraph>> kempe_color(const Multigraph& g, int colors,
                                                   const SearchOptions& options) {
  if (colors < g.max_degree()) {
    throw PreconditionError("too-few-colors", "fewer colours than the maximum degree");
  }
  const int n = g.order();
  Rng rng(options.seed);
  const std::vector<Copy> base = Copies(g);
  if (base.empty()) return std::vector<Multigraph>(static_cast<std::size_t>(colors), Multigraph(n));
  for (int attempt = 0; attempt < options.restarts; ++attempt) {
    std::vector<Copy> order = base;
    if (attempt > 0) shuffle(order, rng);
    Partial p(n, colors, order);
    std::vector<int> pending;
    for (int e = 0; e < static_cast<int>(p.Size()); ++e) {
      if (!TryInsert(p, e, rng)) pending.push_back(e);
    }
    std::int64_t steps = 0;
    while (!pending.empty() && steps < options.step_budget) {
      ++steps;
      const std::size_t pick = uniform_below(rng, pending.size());
      const int e = pending[pick];
      if (TryInsert(p, e, rng)) {
        pending[pick] = pending.back();
        pending.pop_back();
        continue;
      }
      // Eject a random neighbour edge and take its colour.
      const Copy x = p.Edge(e);
      const int end = uniform_below(rng, 2) == 0 ? x.u : x.v;
      const int other = end == x.u ? x.v : x.u;
      std::vector<int> options_c;
      for (int c = 0; c < colors; ++c) {
        if (p.Free(other, c) && !p.Free(end, c)) options_c.push_back(c);
      }
      if (options_c.empty()) {
        for (int c = 0; c < colors; ++c) {
          if (!p.Free(end, c)) options_c.push_back(c);
        }
      }
      const int c = options_c[uniform_below(rng, options_c.size())];
      std::vector<int> victims;
      if (!p.Free(x.u, c)) victims.push_back(p.At(x.u, c));
      if (!p.Free(x.v, c) && p.At(x.v, c) != p.At(x.u, c)) victims.push_back(p.At(x.v, c));
      for (int f : victims) p.Clear(f);
      p.Set(e, c);
      pending[pick] = pending.back();
      pending.pop_back();
      for (int f : victims) pending.push_back(f);
    }
    if (pending.empty()) {
      std::vector<Multigraph> classes(static_cast<std::size_t>(colors), Multigraph(n));
      for (int e = 0; e < static_cast<int>(p.Size()); ++e) {
        classes[static_cast<std::size_t>(p.Color(e))].add(p.Edge(e).u, p.Edge(e).v);
      }
      return classes;
    }
  }
  return std::nullopt;
}

namespace {

class Exact {
 public:
  Exact(const Multigraph& g, const ExactOptions& options) : n_(g.order()), options_(options) {
    for (const Bundle& b : g.bundles()) {
      bu_.push_back(b.u);
      bv_.push_back(b.v);
      mult_.push_back(b.mult);
    }
    index_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), -1);
    for (std::size_t i = 0; i < bu_.size(); ++i) {
      index_[static_cast<std::size_t>(bu_[i] * n_ + bv_[i])] = static_cast<int>(i);
      index_[static_cast<std::size_t>(bv_[i] * n_ + bu_[i])] = static_cast<int>(i);
    }
    use_density_ = n_ <= 12;
  }

  ExactResult Run(int colors) {
    ExactResult r;
    std::vector<std::vector<int>> picked;
    try {
      const bool ok = Solve(mult_, colors, picked);
      r.status = ok ? ExactStatus::kColored : ExactStatus::kImpossible;
    } catch (const Budget&) {
      r.status = ExactStatus::kBudget;
    }
    r.nodes = nodes_;
    if (r.status == ExactStatus::kColored) {
      for (const auto& m : picked) {
        Multigraph cls(n_);
        for (int b : m) cls.add(bu_[static_cast<std::size_t>(b)], bv_[static_cast<std::size_t>(b)]);
        r.classes.push_back(std::move(cls));
      }
      while (static_cast<int>(r.classes.size()) < colors) r.classes.emplace_back(n_);
    }
    return r;
  }

 private:
  struct Budget {};

  std::vector<int> Degrees(const std::vector<int>& m) const {
    std::vector<int> d(static_cast<std::size_t>(n_), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      d[static_cast<std::size_t>(bu_[i])] += m[i];
      d[static_cast<std::size_t>(bv_[i])] += m[i];
    }
    return d;
  }

  // Some odd vertex set with more than colors * (|X|-1)/2 edges left.
  bool DensityBlocks(const std::vector<int>& m, int colors) const {
    const std::uint32_t full = (1U << n_) - 1U;
    std::vector<int> e(static_cast<std::size_t>(full) + 1, 0);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      const int low = std::countr_zero(mask);
      const std::uint32_t rest = mask & (mask - 1);
      int s = e[rest];
      for (std::uint32_t r = rest; r != 0; r &= r - 1) {
        const int b = index_[static_cast<std::size_t>(low * n_ + std::countr_zero(r))];
        if (b >= 0) s += m[static_cast<std::size_t>(b)];
      }
      e[mask] = s;
      const int size = std::popcount(mask);
      if (size >= 3 && size % 2 == 1 && s > colors * ((size - 1) / 2)) return true;
    }
    return false;
  }

  std::string Key(const std::vector<int>& m, int colors) const {
    std::string k(m.size() + 1, '\0');
    k[0] = static_cast<char>(colors);
    for (std::size_t i = 0; i < m.size(); ++i) k[i + 1] = static_cast<char>(m[i]);
    return k;
  }

  bool Solve(const std::vector<int>& m, int colors, std::vector<std::vector<int>>& picked) {
    if (++nodes_ > options_.node_budget) throw Budget{};
    int first = -1;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] > 0) {
        first = static_cast<int>(i);
        break;
      }
    }
    if (first < 0) return true;
    if (colors == 0) return false;
    const std::vector<int> d = Degrees(m);
    if (*std::max_element(d.begin(), d.end()) > colors) return false;
    const std::string key = Key(m, colors);
    if (failed_.count(key) != 0) return false;
    if (use_density_ && DensityBlocks(m, colors)) {
      failed_.insert(key);
      return false;
    }
    std::vector<char> tight(static_cast<std::size_t>(n_), 0);
    for (int v = 0; v < n_; ++v) tight[static_cast<std::size_t>(v)] = d[static_cast<std::size_t>(v)] == colors;
    std::vector<char> matched(static_cast<std::size_t>(n_), 0);
    std::vector<int> chosen{first};
    matched[static_cast<std::size_t>(bu_[static_cast<std::size_t>(first)])] = 1;
    matched[static_cast<std::size_t>(bv_[static_cast<std::size_t>(first)])] = 1;
    std::vector<char> decided = matched;
    std::vector<int> next = m;
    if (Enumerate(0, m, next, d, tight, decided, matched, chosen, colors, picked)) return true;
    failed_.insert(key);
    return false;
  }

  // Extends `chosen` to a maximal matching covering every tight vertex, then
  // recurses on the rest. `decided` marks vertices already matched or skipped.
  bool Enumerate(int x, const std::vector<int>& m, std::vector<int>& next, const std::vector<int>& d,
                 const std::vector<char>& tight, std::vector<char>& decided, std::vector<char>& matched,
                 std::vector<int>& chosen, int colors, std::vector<std::vector<int>>& picked) {
    while (x < n_ && (decided[static_cast<std::size_t>(x)] || d[static_cast<std::size_t>(x)] == 0)) ++x;
    if (x == n_) {
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] > 0 && !matched[static_cast<std::size_t>(bu_[i])] && !matched[static_cast<std::size_t>(bv_[i])]) {
          return false;
        }
      }
      for (int b : chosen) --next[static_cast<std::size_t>(b)];
      picked.push_back(chosen);
      if (Solve(next, colors - 1, picked)) return true;
      picked.pop_back();
      for (int b : chosen) ++next[static_cast<std::size_t>(b)];
      return false;
    }
    const auto sx = static_cast<std::size_t>(x);
    decided[sx] = 1;
    matched[sx] = 1;
    for (int y = x + 1; y < n_; ++y) {
      const auto sy = static_cast<std::size_t>(y);
      if (decided[sy]) continue;
      const int b = index_[static_cast<std::size_t>(x * n_ + y)];
      if (b < 0 || m[static_cast<std::size_t>(b)] == 0) continue;
      decided[sy] = matched[sy] = 1;
      chosen.push_back(b);
      const bool ok = Enumerate(x + 1, m, next, d, tight, decided, matched, chosen, colors, picked);
      chosen.pop_back();
      decided[sy] = matched[sy] = 0;
      if (ok) return true;
    }
    matched[sx] = 0;
    bool ok = false;
    if (!tight[sx]) ok = Enumerate(x + 1, m, next, d, tight, decided, matched, chosen, colors, picked);
    decided[sx] = 0;
    return ok;
  }

  int n_;
  ExactOptions options_;
  std::vector<int> bu_, bv_, mult_;
  std::vector<int> index_;
  bool use_density_ = false;
  std::int64_t nodes_ = 0;
  std::unordered_set<std::string> failed_;
};

}  // namespace

ExactResult exact_color(const Multigraph& g, int colors, const ExactOptions& options) {
  if (colors > 127 || g.max_multiplicity() > 127) {
    throw PreconditionError("too-large", "exact search supports at most 127 colours and multiplicity 127");
  }
  Exact search(g, options);
  return search.Run(colors);
}

}  // namespace mgcolor
