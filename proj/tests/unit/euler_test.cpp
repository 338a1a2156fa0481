#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "mgcolor/error.hpp"
#include "mgcolor/euler.hpp"
#include "test_support.hpp"

using namespace mgcolor;

namespace {

void ExpectCovers(const Trail& t, const Multigraph& g) {
  EXPECT_TRUE(is_valid_trail(t, g));
  EXPECT_TRUE(t.closed());
  EXPECT_EQ(static_cast<std::int64_t>(t.length()), g.edge_count());
  EXPECT_EQ(trail_graph(t, g.order()), g);
}

Multigraph RandomEvenConnected(int n, std::mt19937_64& rng) {
  // Union of random closed walks through a spanning cycle.
  Multigraph g = mgtest::cycle(n);
  for (int k = 0; k < 3; ++k) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);
    const int len = 3 + static_cast<int>(rng() % static_cast<unsigned>(n - 2));
    for (int i = 0; i < len; ++i) g.add(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>((i + 1) % len)]);
  }
  return g;
}

TEST(EulerTour, FourCycle) {
  const Multigraph c4 = mgtest::cycle(4);
  const Trail t = euler_tour(c4);
  ExpectCovers(t, c4);
  EXPECT_EQ(t.vertices, (std::vector<int>{0, 1, 2, 3, 0}));
}

TEST(EulerTour, QuadrupleBundle) {
  Multigraph g(2);
  g.add(0, 1, 4);
  const Trail t = euler_tour(g);
  ExpectCovers(t, g);
  EXPECT_EQ(t.length(), 4U);
  EXPECT_EQ(t.edges.front(), EdgeCopy(0, 1, 3));
}

TEST(EulerTour, Errors) {
  try {
    euler_tour(mgtest::path(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "not-even");
  }
  Multigraph two = with_extra_vertices(mgtest::cycle(3), 3);
  two.add(3, 4);
  two.add(4, 5);
  two.add(3, 5);
  try {
    euler_tour(two);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "disconnected");
  }
}

TEST(EulerTourFrom, Examples) {
  const Multigraph c4 = mgtest::cycle(4);
  const Trail t = euler_tour_from(c4, 2);
  ExpectCovers(t, c4);
  EXPECT_EQ(t.vertices.front(), 2);

  Multigraph bowtie(5);
  bowtie.add(0, 1);
  bowtie.add(1, 2);
  bowtie.add(0, 2);
  bowtie.add(0, 3);
  bowtie.add(3, 4);
  bowtie.add(0, 4);
  const Trail b = euler_tour_from(bowtie, 0);
  ExpectCovers(b, bowtie);
  EXPECT_EQ(b.vertices.front(), 0);

  const Multigraph padded = with_extra_vertices(c4, 1);
  try {
    euler_tour_from(padded, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "bad-start");
  }
}

TEST(EulerTour, RandomMultigraphs) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 10);
    const Multigraph g = RandomEvenConnected(n, rng);
    ExpectCovers(euler_tour(g), g);
    const int start = static_cast<int>(rng() % static_cast<unsigned>(n));
    const Trail t = euler_tour_from(g, start);
    ExpectCovers(t, g);
    EXPECT_EQ(t.vertices.front(), start);
  }
}

void ExpectDecomposition(const Multigraph& g, const CyclePathDecomposition& d) {
  Multigraph sum(g.order());
  std::set<EdgeCopy> used;
  for (const Trail& c : d.cycles) {
    EXPECT_TRUE(c.closed());
    EXPECT_TRUE(is_valid_trail(c, g));
    std::set<int> inner(c.vertices.begin() + 1, c.vertices.end());
    EXPECT_EQ(inner.size(), c.length());
    for (const EdgeCopy& e : c.edges) EXPECT_TRUE(used.insert(e).second);
    sum = combined(sum, trail_graph(c, g.order()));
  }
  std::vector<int> ends;
  Multigraph paths(g.order());
  for (const Trail& p : d.paths) {
    EXPECT_FALSE(p.closed());
    EXPECT_TRUE(is_valid_trail(p, g));
    std::set<int> all(p.vertices.begin(), p.vertices.end());
    EXPECT_EQ(all.size(), p.vertices.size());
    for (const EdgeCopy& e : p.edges) EXPECT_TRUE(used.insert(e).second);
    ends.push_back(p.vertices.front());
    ends.push_back(p.vertices.back());
    paths = combined(paths, trail_graph(p, g.order()));
  }
  sum = combined(sum, paths);
  EXPECT_EQ(sum, g);
  std::vector<int> odd;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) % 2 != 0) odd.push_back(v);
  }
  std::sort(ends.begin(), ends.end());
  EXPECT_EQ(ends, odd);
  // Union of the paths is a forest.
  std::vector<int> parent(static_cast<std::size_t>(g.order()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (const Bundle& b : paths.bundles()) {
    EXPECT_EQ(b.mult, 1);
    const int a = find(b.u);
    const int c = find(b.v);
    EXPECT_NE(a, c);
    parent[static_cast<std::size_t>(a)] = c;
  }
}

TEST(CyclePathDecompose, Examples) {
  const Multigraph c6 = mgtest::cycle(6);
  const auto even = cycle_path_decompose(c6);
  EXPECT_TRUE(even.paths.empty());
  ExpectDecomposition(c6, even);

  const Multigraph p4 = mgtest::path(4);
  const auto path = cycle_path_decompose(p4);
  EXPECT_TRUE(path.cycles.empty());
  EXPECT_EQ(path.paths.size(), 1U);
  ExpectDecomposition(p4, path);

  const Multigraph k4 = mgtest::complete(4);
  const auto k = cycle_path_decompose(k4);
  EXPECT_EQ(k.paths.size(), 2U);
  ExpectDecomposition(k4, k);
}

TEST(CyclePathDecompose, RandomMultigraphs) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 10);
    const Multigraph g = mgtest::random_multigraph(n, 3, 0.5, rng);
    ExpectDecomposition(g, cycle_path_decompose(g));
  }
}

void ExpectBoundedForest(const Multigraph& g, const Multigraph& t) {
  EXPECT_TRUE(is_subgraph(t, g));
  EXPECT_LE(t.max_multiplicity(), 1);
  for (int v = 0; v < g.order(); ++v) EXPECT_LE(2 * t.degree(v), 2 + g.degree(v));
  // Spanning forest: same components as g, and acyclic.
  const int comps = nontrivial_components(g);
  EXPECT_EQ(t.edge_count(), static_cast<std::int64_t>(
                                std::count_if(g.degrees().begin(), g.degrees().end(),
                                              [](int d) { return d > 0; })) -
                                comps);
  EXPECT_EQ(nontrivial_components(t), comps);
}

TEST(BoundedSpanningForest, Examples) {
  const Multigraph c5 = mgtest::cycle(5);
  ExpectBoundedForest(c5, bounded_spanning_forest(c5));
  Multigraph two(2);
  two.add(0, 1, 2);
  const Multigraph t = bounded_spanning_forest(two);
  EXPECT_EQ(t.edge_count(), 1);
  EXPECT_THROW(bounded_spanning_forest(mgtest::path(3)), Error);
}

TEST(BoundedSpanningForest, RandomEvenConnected) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const Multigraph g = RandomEvenConnected(10, rng);
    ExpectBoundedForest(g, bounded_spanning_forest(g));
  }
}

}  // namespace
