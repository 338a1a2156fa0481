#include <gtest/gtest.h>

#include <random>

#include "mgcolor/error.hpp"
#include "mgcolor/fg_coloring.hpp"
#include "test_support.hpp"

using namespace mgcolor;

namespace {

Bipartition Halves(int left, int right) {
  Bipartition p;
  p.side.assign(static_cast<std::size_t>(left), 0);
  p.side.resize(static_cast<std::size_t>(left + right), 1);
  return p;
}

Multigraph CompleteBipartite(int a, int b, int r = 1) {
  Multigraph g(a + b);
  for (int u = 0; u < a; ++u) {
    for (int v = a; v < a + b; ++v) g.set_mult(u, v, r);
  }
  return g;
}

// Independent check of a colouring in the EdgeColoring form.
void ExpectFG(const Multigraph& g, const FGSpec& spec, const EdgeColoring& c, int bound) {
  EXPECT_LE(c.colors, bound);
  const auto classes = color_classes(c, g.order());
  Multigraph sum(g.order());
  for (const Multigraph& h : classes) {
    for (int v = 0; v < g.order(); ++v) EXPECT_LE(h.degree(v), spec.f[static_cast<std::size_t>(v)]);
    for (const Bundle& b : h.bundles()) EXPECT_LE(b.mult, spec.g(b.u, b.v));
    sum = combined(sum, h);
  }
  EXPECT_EQ(sum, g);
}

TEST(FgBipartite, Examples) {
  const Multigraph k33 = CompleteBipartite(3, 3);
  const FGSpec f3 = FGSpec::uniform(6, 3, 1);
  EXPECT_EQ(fg_color_bipartite(k33, f3, Halves(3, 3)).colors, 1);
  const FGSpec f1 = FGSpec::uniform(6, 1, 1);
  const EdgeColoring c = fg_color_bipartite(k33, f1, Halves(3, 3));
  EXPECT_EQ(c.colors, 3);
  ExpectFG(k33, f1, c, 3);

  Multigraph five(2);
  five.add(0, 1, 5);
  const FGSpec s = FGSpec::uniform(2, 5, 2);
  const auto classes = fg_classes_bipartite(five, s, Halves(1, 1));
  ASSERT_EQ(classes.size(), 3U);
  std::vector<int> split;
  for (const auto& h : classes) split.push_back(h.mult(0, 1));
  std::sort(split.begin(), split.end());
  EXPECT_EQ(split, (std::vector<int>{1, 2, 2}));
}

TEST(FgBipartite, RejectsBadPartition) {
  try {
    fg_color_bipartite(mgtest::cycle(3), FGSpec::uniform(3, 1, 1), Halves(2, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "not-bipartite");
  }
}

TEST(FgBipartite, RandomInstances) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const int a = 1 + static_cast<int>(rng() % 6);
    const int b = 1 + static_cast<int>(rng() % 6);
    Multigraph g(a + b);
    for (int u = 0; u < a; ++u) {
      for (int v = a; v < a + b; ++v) {
        if (rng() % 3 != 0) g.set_mult(u, v, static_cast<int>(rng() % 5));
      }
    }
    FGSpec spec;
    for (int v = 0; v < a + b; ++v) spec.f.push_back(1 + static_cast<int>(rng() % 4));
    spec.g_default = 1 + static_cast<int>(rng() % 3);
    for (const Bundle& bd : g.bundles()) {
      if (rng() % 4 == 0) spec.set_g(bd.u, bd.v, 1 + static_cast<int>(rng() % 4));
    }
    const int bound = fg_bound(g, spec);
    ExpectFG(g, spec, fg_color_bipartite(g, spec, Halves(a, b)), bound);
  }
}

TEST(FgEven, Examples) {
  const Multigraph c4 = mgtest::cycle(4);
  EXPECT_EQ(fg_color_even(c4, FGSpec::uniform(4, 2, 2)).colors, 1);

  const Multigraph k4 = mgtest::complete(4, 2);
  const FGSpec s = FGSpec::uniform(4, 2, 2);
  const EdgeColoring c = fg_color_even(k4, s);
  EXPECT_EQ(c.colors, 3);
  ExpectFG(k4, s, c, 3);

  std::mt19937_64 rng(2);
  const Multigraph g = mgtest::random_multigraph(7, 3, 0.7, rng);
  FGSpec big;
  for (int v = 0; v < 7; ++v) big.f.push_back(std::max(2, g.degree(v) + g.degree(v) % 2));
  big.g_default = 2 * g.max_multiplicity();
  EXPECT_EQ(fg_color_even(g, big).colors, 1);

  try {
    fg_color_even(c4, FGSpec::uniform(4, 3, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "parity");
  }
  EXPECT_THROW(fg_color_even(c4, FGSpec::uniform(4, 2, 1)), Error);
}

TEST(FgEven, RandomInstances) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const Multigraph g = mgtest::random_multigraph(n, 5, 0.6, rng);
    FGSpec spec;
    for (int v = 0; v < n; ++v) spec.f.push_back(2 * (1 + static_cast<int>(rng() % 3)));
    spec.g_default = 2 * (1 + static_cast<int>(rng() % 2));
    const int bound = fg_bound(g, spec);
    ExpectFG(g, spec, fg_color_even(g, spec), bound);
  }
}

TEST(OrientDoubled, Examples) {
  Multigraph two(2);
  two.add(0, 1, 2);
  const Orientation d = orient_doubled(two);
  EXPECT_EQ(d.arc(0, 1), 2);
  EXPECT_EQ(d.arc(1, 0), 2);
  EXPECT_EQ(d.singleton_pairs.edge_count(), 0);

  const Multigraph c5 = mgtest::cycle(5);
  const Orientation dc = orient_doubled(c5);
  EXPECT_EQ(dc.singleton_pairs.edge_count(), 0);
  for (int v = 0; v < 5; ++v) {
    EXPECT_EQ(dc.out_degree(v), 2);
    const int w = (v + 1) % 5;
    EXPECT_TRUE((dc.arc(v, w) == 2 && dc.arc(w, v) == 0) || (dc.arc(v, w) == 0 && dc.arc(w, v) == 2));
  }
  EXPECT_FALSE(check_orientation(dc, c5, 2).has_value());

  const Multigraph p3 = mgtest::path(3);
  const Orientation dp = orient_doubled(p3);
  EXPECT_EQ(dp.singleton_pairs.edge_count(), 2);
  EXPECT_FALSE(check_orientation(dp, p3, 1).has_value());
}

TEST(OrientDoubled, RandomContract) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 11);
    const int mu = 2 + static_cast<int>(rng() % 3);
    const Multigraph g = mgtest::random_multigraph(n, mu, 0.6, rng);
    const Orientation d = orient_doubled(g);
    EXPECT_FALSE(check_orientation(d, g, std::max(2, g.max_multiplicity())).has_value());
  }
}

TEST(DoubleCover, Examples) {
  Orientation two(2);
  two.add_arc(0, 1);
  two.add_arc(1, 0);
  const DoubleCover h = double_cover(two);
  EXPECT_EQ(h.graph.mult(0, 3), 1);
  EXPECT_EQ(h.graph.mult(1, 2), 1);
  EXPECT_EQ(h.graph.edge_count(), 2);

  Orientation tri(3);
  tri.add_arc(0, 1);
  tri.add_arc(1, 2);
  tri.add_arc(2, 0);
  const DoubleCover ht = double_cover(tri);
  EXPECT_EQ(ht.graph.edge_count(), 3);
  EXPECT_EQ(ht.graph.max_degree(), 1);

  const DoubleCover hc = double_cover(orient_doubled(mgtest::cycle(5)));
  EXPECT_EQ(hc.graph.order(), 10);
  EXPECT_TRUE(hc.graph.is_regular());
  EXPECT_EQ(hc.graph.max_degree(), 2);
}

TEST(CollapseCover, Examples) {
  Multigraph one(4);
  one.add(0, 3);
  EXPECT_EQ(collapse_cover(one, 2).mult(0, 1), 1);
  one.add(1, 2);
  EXPECT_EQ(collapse_cover(one, 2).mult(0, 1), 2);
}

TEST(CollapseCover, RoundTrip) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 8);
    const Multigraph g = mgtest::random_multigraph(n, 3, 0.6, rng);
    const DoubleCover h = double_cover(orient_doubled(g));
    // Arbitrary partition of H into random pieces.
    Multigraph rest = h.graph;
    Multigraph sum(n);
    while (rest.edge_count() > 0) {
      Multigraph piece(2 * n);
      for (const Bundle& b : rest.bundles()) piece.set_mult(b.u, b.v, static_cast<int>(rng() % (b.mult + 1)));
      rest = remove_layer(rest, piece);
      sum = combined(sum, collapse_cover(piece, n));
    }
    EXPECT_EQ(sum, doubled(g));
    for (int v = 0; v < n; ++v) EXPECT_EQ(h.graph.degree(v), g.degree(v));
  }
}

}  // namespace
