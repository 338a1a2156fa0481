#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "mgcolor/coloring.hpp"
#include "mgcolor/error.hpp"
#include "mgcolor/graph_io.hpp"
#include "mgcolor/multigraph.hpp"
#include "test_support.hpp"

using namespace mgcolor;

namespace {

Multigraph PStarByHand(int r = 1) {
  const Multigraph p = mgtest::petersen_by_hand(r);
  // Relabel 1..9 -> 0..8.
  Multigraph g(9);
  for (const Bundle& b : p.bundles()) {
    if (b.u != 0) g.set_mult(b.u - 1, b.v - 1, b.mult);
  }
  return g;
}

TEST(Multigraph, BasicAccessors) {
  Multigraph g(4);
  g.add(0, 1, 3);
  g.add(2, 1);
  EXPECT_EQ(g.mult(1, 0), 3);
  EXPECT_EQ(g.mult(1, 2), 1);
  EXPECT_EQ(g.degree(1), 4);
  EXPECT_EQ(g.edge_count(), 4);
  EXPECT_EQ(g.max_multiplicity(), 3);
  EXPECT_EQ(g.min_degree(), 0);
  EXPECT_EQ(g.neighbors(1), (std::vector<int>{0, 2}));
  EXPECT_THROW(g.add(2, 2), Error);
  EXPECT_THROW(g.add(0, 3, -1), Error);
}

TEST(Multigraph, EdgeCopyIsUnordered) {
  EXPECT_EQ(EdgeCopy(3, 1, 2), EdgeCopy(1, 3, 2));
}

TEST(DegreeProfile, Triangle) {
  const DegreeProfile p = degree_profile(mgtest::cycle(3));
  EXPECT_EQ(p.min_degree, 2);
  EXPECT_EQ(p.max_degree, 2);
  EXPECT_EQ(p.max_multiplicity, 1);
  EXPECT_EQ(p.max_degree_vertices, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(p.min_degree_vertices, (std::vector<int>{0, 1, 2}));
}

TEST(DegreeProfile, PetersenMinusVertex) {
  // Vertex 0 of the hand-built Petersen graph has neighbours 1, 4, 5; after
  // relabelling they are 0, 3, 4.
  const DegreeProfile p = degree_profile(PStarByHand());
  EXPECT_EQ(p.min_degree, 2);
  EXPECT_EQ(p.max_degree, 3);
  EXPECT_EQ(p.max_multiplicity, 1);
  EXPECT_EQ(p.min_degree_vertices, (std::vector<int>{0, 3, 4}));
  EXPECT_EQ(p.max_degree_vertices.size(), 6U);
}

TEST(DegreeProfile, TripledPetersenMinusVertex) {
  const DegreeProfile p = degree_profile(PStarByHand(3));
  EXPECT_EQ(p.min_degree, 6);
  EXPECT_EQ(p.max_degree, 9);
  EXPECT_EQ(p.max_multiplicity, 3);
  EXPECT_EQ(p.max_degree_vertices.size(), 6U);
  EXPECT_EQ(p.min_degree_vertices.size(), 3U);
}

TEST(Doubled, Examples) {
  Multigraph e(2);
  e.add(0, 1);
  EXPECT_EQ(doubled(e).mult(0, 1), 2);
  const Multigraph q = doubled(PStarByHand(3));
  EXPECT_EQ(q.max_degree(), 18);
  EXPECT_EQ(q.max_multiplicity(), 6);
  EXPECT_EQ(doubled(Multigraph(5)), Multigraph(5));
  EXPECT_EQ(halved(q), PStarByHand(3));
  EXPECT_THROW(halved(e), Error);
}

TEST(RemoveLayer, Examples) {
  const Multigraph k6 = mgtest::complete(6);
  Multigraph m(6);
  m.add(0, 1);
  m.add(2, 3);
  m.add(4, 5);
  const Multigraph rest = remove_layer(k6, m);
  EXPECT_TRUE(rest.is_regular());
  EXPECT_EQ(rest.max_degree(), 4);
  const Multigraph c = mgtest::cycle(6);
  EXPECT_EQ(remove_layer(k6, c).max_degree(), 3);
  EXPECT_TRUE(remove_layer(k6, c).is_regular());
  EXPECT_EQ(remove_layer(k6, k6).edge_count(), 0);
  EXPECT_THROW(remove_layer(m, k6), Error);
}

TEST(UnderlyingSimple, Examples) {
  EXPECT_EQ(underlying_simple(mgtest::petersen_by_hand(3)), mgtest::petersen_by_hand());
  EXPECT_EQ(underlying_simple(mgtest::complete(5)), mgtest::complete(5));
  Multigraph two(2);
  two.add(0, 1, 5);
  EXPECT_EQ(underlying_simple(two).mult(0, 1), 1);
}

TEST(Multigraph, RandomProperties) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const Multigraph g = mgtest::random_multigraph(n, 4, 0.6, rng);
    // Random sub-layer.
    Multigraph layer(n);
    for (const Bundle& b : g.bundles()) layer.set_mult(b.u, b.v, static_cast<int>(rng() % (b.mult + 1)));
    const Multigraph rest = remove_layer(g, layer);
    std::int64_t sum = 0;
    for (int v = 0; v < n; ++v) {
      EXPECT_EQ(g.degree(v), rest.degree(v) + layer.degree(v));
      sum += g.degree(v);
    }
    EXPECT_EQ(sum, 2 * g.edge_count());
    EXPECT_EQ(halved(doubled(g)), g);
    EXPECT_EQ(combined(rest, layer), g);
  }
}

TEST(Predicates, MatchingsAndCycles) {
  Multigraph m(4);
  m.add(0, 1);
  m.add(2, 3);
  EXPECT_TRUE(is_perfect_matching(m));
  EXPECT_TRUE(is_hamilton_cycle(mgtest::cycle(5)));
  Multigraph two_triangles = with_extra_vertices(mgtest::cycle(3), 3);
  two_triangles.add(3, 4);
  two_triangles.add(4, 5);
  two_triangles.add(3, 5);
  EXPECT_FALSE(is_hamilton_cycle(two_triangles));
  EXPECT_EQ(nontrivial_components(two_triangles), 2);
  EXPECT_FALSE(is_hamilton_cycle(mgtest::cycle(4, 2)));
}

TEST(GraphIo, RoundTrip) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const Multigraph g = mgtest::random_multigraph(1 + static_cast<int>(rng() % 10), 5, 0.5, rng);
    const std::string text = graph_to_string(g);
    std::istringstream in(text);
    const Multigraph back = read_graph(in);
    EXPECT_EQ(back, g);
    EXPECT_EQ(graph_to_string(back), text);
  }
}

TEST(GraphIo, CommentsAndErrors) {
  std::istringstream ok("# hello\nn 3\n# mid\ne 0 1 2\ne 1 2 1\n");
  const Multigraph g = read_graph(ok);
  EXPECT_EQ(g.mult(0, 1), 2);
  EXPECT_EQ(g.edge_count(), 3);
  for (const char* bad : {"e 0 1 1\n", "n 3\ne 1 0 1\n", "n 3\ne 0 1 0\n", "n 3\ne 0 5 1\n",
                          "n 3\ne 0 1 1\ne 0 1 1\n", "n 3\nn 3\n", "n 3\nx 1\n"}) {
    std::istringstream in(bad);
    EXPECT_THROW(read_graph(in), Error) << bad;
  }
}

TEST(Coloring, CopiesTakeHighestFirst) {
  Multigraph a(2);
  a.add(0, 1, 2);
  Multigraph b(2);
  b.add(0, 1, 1);
  const std::vector<Multigraph> layers{a, b};
  const auto copies = assign_copies(layers);
  EXPECT_EQ(copies[0], (std::vector<EdgeCopy>{EdgeCopy(0, 1, 1), EdgeCopy(0, 1, 2)}));
  EXPECT_EQ(copies[1], (std::vector<EdgeCopy>{EdgeCopy(0, 1, 0)}));
  const EdgeColoring c = coloring_from_classes(layers);
  EXPECT_EQ(c.colors, 2);
  const auto back = color_classes(c, 2);
  EXPECT_EQ(back[0], a);
  EXPECT_EQ(back[1], b);
  std::istringstream in(coloring_to_string(c));
  EXPECT_EQ(read_coloring(in), c);
}

TEST(Decomposition, Checker) {
  const Multigraph k4 = mgtest::complete(4);
  Multigraph m1(4), m2(4), m3(4);
  m1.add(0, 1);
  m1.add(2, 3);
  m2.add(0, 2);
  m2.add(1, 3);
  m3.add(0, 3);
  m3.add(1, 2);
  Decomposition d;
  d.layers.push_back({LayerKind::kMatching, 1, m1});
  d.layers.push_back({LayerKind::kHamiltonCycle, 2, combined(m2, m3)});
  EXPECT_FALSE(check_decomposition(k4, d).has_value());
  const LayerCensus c = census(d);
  EXPECT_EQ(c.matchings, 1);
  EXPECT_EQ(c.hamilton_cycles, 1);
  d.layers.pop_back();
  EXPECT_TRUE(check_decomposition(k4, d).has_value());
  d.layers.push_back({LayerKind::kMatching, 1, combined(m2, m3)});
  EXPECT_TRUE(check_decomposition(k4, d).has_value());

  FactorizationCertificate cert{{m1, m2, m3}, k4};
  EXPECT_FALSE(check_factorization(cert).has_value());
  cert.matchings.pop_back();
  EXPECT_TRUE(check_factorization(cert).has_value());
}

}  // namespace
