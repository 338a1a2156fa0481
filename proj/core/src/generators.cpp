#include "mgcolor/generators.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <vector>

#include "mgcolor/error.hpp"
#include "mgcolor/hamilton.hpp"
#include "mgcolor/rng.hpp"

namespace mgcolor {

Multigraph petersen() { return q(1); }

Multigraph q(int r) {
  if (r < 1) throw PreconditionError("bad-params", "r must be >= 1");
  Multigraph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add(i, (i + 1) % 5, r);
    g.add(i, i + 5, r);
    g.add(5 + i, 5 + (i + 2) % 5, r);
  }
  return g;
}

Multigraph q_star(int r) {
  const Multigraph full = q(r);
  Multigraph g(9);
  for (const Bundle& b : full.bundles()) {
    if (b.u != 0) g.set_mult(b.u - 1, b.v - 1, b.mult);
  }
  return g;
}

Multigraph p_star() { return q_star(1); }

Multigraph folded_complete(int n, int r) {
  if (n < 1 || r < 0) throw PreconditionError("bad-params", "need n >= 1 and r >= 0");
  Multigraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.set_mult(u, v, r);
  }
  return g;
}

namespace {

// Random relabelling: layer found in the permuted graph, mapped back.
std::vector<int> Permutation(int n, Rng& rng) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  shuffle(p, rng);
  return p;
}

Multigraph Relabel(const Multigraph& g, const std::vector<int>& p) {
  Multigraph h(g.order());
  for (const Bundle& b : g.bundles()) h.set_mult(p[static_cast<std::size_t>(b.u)], p[static_cast<std::size_t>(b.v)], b.mult);
  return h;
}

Multigraph Unrelabel(const Multigraph& h, const std::vector<int>& p) {
  std::vector<int> inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return Relabel(h, inv);
}

// Pairs that still have room below multiplicity r.
Multigraph Room(const Multigraph& g, int r) {
  Multigraph room(g.order());
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (g.mult(u, v) < r) room.set_mult(u, v, 1);
    }
  }
  return room;
}

bool AddLayer(Multigraph& g, int r, bool cycle, Rng& rng) {
  const int n = g.order();
  for (int tries = 0; tries < 8; ++tries) {
    const auto p = Permutation(n, rng);
    const Multigraph room = Relabel(Room(g, r), p);
    HamiltonOptions opt;
    opt.seed = rng();
    opt.exhaustive_cap = 0;
    try {
      Multigraph layer;
      if (cycle) {
        HamiltonResult h = hamilton_cycle(room, opt);
        if (!h.found()) continue;
        layer = std::move(h.cycle);
      } else {
        layer = perfect_matching_avoiding(room, {}, opt);
      }
      g = combined(g, Unrelabel(layer, p));
      return true;
    } catch (const Error&) {
      continue;
    }
  }
  return false;
}

Multigraph BuildRegular(int n, int r, int k, Rng& rng) {
  for (int attempt = 0; attempt < 40; ++attempt) {
    Multigraph g(n);
    bool ok = true;
    if (k % 2 == 1) ok = AddLayer(g, r, false, rng);
    for (int i = 0; ok && i < k / 2; ++i) ok = AddLayer(g, r, true, rng);
    if (ok) return g;
  }
  throw ConstructionError("generate", "could not superpose layers", "generation-failed");
}

void CheckFeasible(const GeneratorSpec& s, int k) {
  if (s.n < 2 || s.r < 1) throw PreconditionError("infeasible", "need n >= 2 and r >= 1");
  if (k < 0 || k > s.r * (s.n - 1)) {
    throw PreconditionError("infeasible", "k = " + std::to_string(k) + " outside [0, r(n-1)]");
  }
  if ((static_cast<long long>(s.n) * k) % 2 != 0) throw PreconditionError("infeasible", "n*k is odd");
}

}  // namespace

Multigraph gen_regular_multigraph(const GeneratorSpec& spec) {
  const int k = spec.target;
  CheckFeasible(spec, k);
  const int n = spec.n;
  const int r = spec.r;
  const int full = r * (n - 1);
  if (k == full) return folded_complete(n, r);
  if (k == 0) return Multigraph(n);
  if (n == 2) {
    Multigraph g(2);
    g.add(0, 1, k);
    return g;
  }
  Rng rng(spec.seed);
  const int co = full - k;
  if (co < k) return remove_layer(folded_complete(n, r), BuildRegular(n, r, co, rng));
  return BuildRegular(n, r, k, rng);
}

Multigraph gen_min_degree_multigraph(const GeneratorSpec& spec) {
  const int n = spec.n;
  const int r = spec.r;
  const int delta = spec.target;
  if (n < 2 || r < 1 || delta < 0 || delta > r * (n - 1)) {
    throw PreconditionError("infeasible", "minimum degree outside [0, r(n-1)]");
  }
  GeneratorSpec base = spec;
  base.regime = Regime::kRegular;
  base.target = delta % 2 == 1 && n % 2 == 1 ? delta + 1 : delta;
  if (base.target > r * (n - 1)) throw PreconditionError("infeasible", "no regular base of that degree");
  Multigraph g = gen_regular_multigraph(base);
  Rng rng(spec.seed ^ 0x9e3779b97f4a7c15ULL);
  const int extra = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));
  for (int i = 0; i < extra * 4 && i < 4 * n; ++i) {
    const int u = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));
    const int v = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));
    if (u != v && g.mult(u, v) < r) g.add(u, v);
  }
  return g;
}

namespace {

int Between(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

// Removal graph with the given degrees, mu <= r, no pair inside [0, m).
bool RemovalGraph(std::vector<int> demand, int r, int m, Rng& rng, Multigraph& out) {
  const int n = static_cast<int>(demand.size());
  out = Multigraph(n);
  for (;;) {
    int v = -1;
    for (int x = 0; x < n; ++x) {
      if (demand[static_cast<std::size_t>(x)] > 0 && (v < 0 || demand[static_cast<std::size_t>(x)] > demand[static_cast<std::size_t>(v)])) v = x;
    }
    if (v < 0) return true;
    std::vector<int> best;
    int top = 0;
    for (int u = 0; u < n; ++u) {
      const int d = demand[static_cast<std::size_t>(u)];
      if (u == v || d <= 0 || out.mult(u, v) >= r || (u < m && v < m)) continue;
      if (d > top) {
        top = d;
        best.clear();
      }
      if (d == top) best.push_back(u);
    }
    if (best.empty()) return false;
    const int u = best[uniform_below(rng, best.size())];
    out.add(u, v);
    --demand[static_cast<std::size_t>(u)];
    --demand[static_cast<std::size_t>(v)];
  }
}

}  // namespace

Multigraph gen_deficient_dense_multigraph(const GeneratorSpec& spec) {
  const int n = spec.n;
  const int r = spec.r;
  const int floor_degree = spec.target;
  if (n < 10 || n % 2 != 0 || r < 1 || floor_degree < 0) {
    throw PreconditionError("infeasible", "need even n >= 10, r >= 1, delta >= 0");
  }
  Rng rng(spec.seed);
  for (int attempt = 0; attempt < 200; ++attempt) {
    const int m = Between(rng, 3, 4);
    const int low = 2 * r + 1;
    const int high = Between(rng, low, low + 4);
    std::vector<int> demand(static_cast<std::size_t>(n), 0);
    int sum = 0;
    int widest = 0;
    for (int i = 0; i < m; ++i) {
      demand[static_cast<std::size_t>(i)] = Between(rng, low, high);
      sum += demand[static_cast<std::size_t>(i)];
      widest = std::max(widest, demand[static_cast<std::size_t>(i)]);
    }
    // the other vertices absorb the clique's extra removals
    const int a = (sum + n - 2 * m - 1) / (n - 2 * m) + Between(rng, 0, 1);
    if (r * (n - 1) - a - widest < floor_degree) continue;
    int total = 0;
    for (int& d : demand) {
      d += a;
      total += d;
    }
    if (total % 2 != 0) ++demand[static_cast<std::size_t>(m)];
    Multigraph removal;
    if (!RemovalGraph(demand, r, m, rng, removal)) continue;
    const Multigraph g = remove_layer(folded_complete(n, r), removal);
    if (g.min_degree() < floor_degree) continue;
    return Relabel(g, Permutation(n, rng));
  }
  throw ConstructionError("generate", "no deficient clique layout fits the degree floor", "generation-failed");
}

Multigraph generate(const GeneratorSpec& spec) {
  return spec.regime == Regime::kRegular ? gen_regular_multigraph(spec) : gen_min_degree_multigraph(spec);
}

namespace {

std::vector<std::int64_t> Params(std::string_view name, std::string_view& head) {
  std::vector<std::int64_t> out;
  const auto open = name.find('(');
  if (open == std::string_view::npos) {
    head = name;
    return out;
  }
  if (name.back() != ')') throw PreconditionError("bad-params", "missing ')' in " + std::string(name));
  head = name.substr(0, open);
  std::string_view body = name.substr(open + 1, name.size() - open - 2);
  while (!body.empty()) {
    const auto comma = body.find(',');
    std::string_view item = body.substr(0, comma);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc{} || ptr != item.data() + item.size() || item.empty()) {
      throw PreconditionError("bad-params", "bad parameter '" + std::string(item) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

Multigraph named_instance(std::string_view name) {
  std::string_view head;
  const auto p = Params(name, head);
  auto want = [&](std::size_t count) {
    if (p.size() != count) {
      throw PreconditionError("bad-params", std::string(head) + " takes " + std::to_string(count) + " parameters");
    }
  };
  auto small = [](std::int64_t x) { return static_cast<int>(std::clamp<std::int64_t>(x, -1, 1 << 20)); };
  if (head == "petersen") {
    want(0);
    return petersen();
  }
  if (head == "p_star") {
    want(0);
    return p_star();
  }
  if (head == "q") {
    want(1);
    return q(small(p[0]));
  }
  if (head == "q_star") {
    want(1);
    return q_star(small(p[0]));
  }
  if (head == "folded_complete") {
    want(2);
    return folded_complete(small(p[0]), small(p[1]));
  }
  if (head == "regular_dense") {
    want(4);
    GeneratorSpec s;
    s.n = small(p[0]);
    s.r = small(p[1]);
    s.target = small(p[2]);
    s.seed = static_cast<std::uint64_t>(p[3]);
    return gen_regular_multigraph(s);
  }
  if (head == "deficient_dense") {
    want(4);
    GeneratorSpec s;
    s.n = small(p[0]);
    s.r = small(p[1]);
    s.target = small(p[2]);
    s.seed = static_cast<std::uint64_t>(p[3]);
    return gen_deficient_dense_multigraph(s);
  }
  throw PreconditionError("unknown-instance", "unknown instance '" + std::string(name) + "'");
}

}  // namespace mgcolor
