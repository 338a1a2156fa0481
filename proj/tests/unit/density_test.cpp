#include <gtest/gtest.h>

#include <random>

#include "mgcolor/density.hpp"
#include "mgcolor/error.hpp"
#include "test_support.hpp"

using namespace mgcolor;

namespace {

TEST(Rational, FormatAndParse) {
  EXPECT_EQ(to_string(Rational(10, 2)), "5/1");
  EXPECT_EQ(to_string(Rational(7, 2)), "7/2");
  EXPECT_EQ(parse_rational("1/2"), Rational(1, 2));
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_THROW(parse_rational("x"), Error);
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_EQ(mgcolor::ceil(Rational(7, 2)), 4);
  EXPECT_EQ(mgcolor::ceil(Rational(4)), 4);
  EXPECT_EQ(mgcolor::floor(Rational(7, 2)), 3);
}

TEST(DensityExact, Triangle) {
  const DensityReport r = density_exact(mgtest::cycle(3));
  EXPECT_EQ(r.omega, Rational(3));
  EXPECT_EQ(r.witness, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(r.chi_f, Rational(3));
}

TEST(DensityExact, K5) {
  const DensityReport r = density_exact(mgtest::complete(5));
  EXPECT_EQ(r.omega, Rational(5));
  EXPECT_EQ(r.witness, (std::vector<int>{0, 1, 2, 3, 4}));
  EXPECT_EQ(r.omega, mgtest::brute_density(mgtest::complete(5)).omega);
}

TEST(DensityExact, TripledTriangle) {
  EXPECT_EQ(density_exact(mgtest::cycle(3, 4)).omega, Rational(12));
}

TEST(DensityExact, TinyGraphConvention) {
  Multigraph g(2);
  g.add(0, 1, 3);
  const DensityReport r = density_exact(g);
  EXPECT_EQ(r.omega, Rational(0));
  EXPECT_EQ(r.chi_f, Rational(3));
  EXPECT_TRUE(r.witness.empty());
}

TEST(DensityExact, CapExceeded) {
  // n = 17 odd, so the fast path cannot rescue it.
  try {
    density_exact(mgtest::complete(17));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "cap-exceeded");
    EXPECT_NE(std::string(e.what()).find("delta > mu*n/2"), std::string::npos);
  }
  DensityOptions wide;
  wide.enumeration_cap = 17;
  EXPECT_EQ(density_exact(mgtest::cycle(17), wide).omega, Rational(17, 8));
}

TEST(DensityExact, MatchesBruteForce) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 8);
    const Multigraph g = mgtest::random_multigraph(n, 3, 0.3 + 0.1 * (trial % 7), rng);
    const DensityReport r = density_exact(g);
    const auto brute = mgtest::brute_density(g);
    EXPECT_EQ(r.omega, brute.omega);
    EXPECT_EQ(r.witness, brute.witness);
    EXPECT_EQ(r.chi_f, std::max(Rational(g.max_degree()), brute.omega));
    ASSERT_EQ(r.witness.size() % 2, 1U);
    EXPECT_EQ(Rational(edges_within(g, r.witness), static_cast<std::int64_t>(r.witness.size() - 1) / 2),
              r.omega);
  }
}

TEST(DensityFastpath, DoubledK8) {
  const Multigraph g = mgtest::complete(8, 2);
  ASSERT_TRUE(fastpath_applicable(g));
  const DensityReport fast = density_fastpath(g);
  EXPECT_EQ(fast.classification, OverfullClass::kNone);
  EXPECT_EQ(fast, density_exact(g));
}

TEST(DensityFastpath, DoubledK8MinusOneCopy) {
  Multigraph g = mgtest::complete(8, 2);
  g.add(0, 1, -1);
  ASSERT_TRUE(fastpath_applicable(g));
  std::int64_t e = 0;
  for (int u = 1; u < 8; ++u) {
    for (int v = u + 1; v < 8; ++v) e += g.mult(u, v);
  }
  // Exactly on the boundary, but Delta(G - 0) = 12 < 14.
  EXPECT_EQ(e, 14 * 3);
  EXPECT_EQ(density_fastpath(g).classification, OverfullClass::kNone);
  EXPECT_EQ(density_fastpath(g), density_exact(g));
}

TEST(DensityFastpath, OddOrderRejected) {
  try {
    density_fastpath(mgtest::complete(7, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "fastpath-inapplicable");
  }
}

TEST(DensityFastpath, AgreesWithEnumeration) {
  std::mt19937_64 rng(5);
  int checked = 0;
  for (int trial = 0; trial < 4000 && checked < 400; ++trial) {
    const int n = 4 + 2 * static_cast<int>(rng() % 5);
    const int mu = 1 + static_cast<int>(rng() % 3);
    Multigraph g = mgtest::random_multigraph(n, mu, 0.95, rng);
    for (const Bundle& b : g.bundles()) {
      if (rng() % 3 == 0) g.set_mult(b.u, b.v, mu);
    }
    if (!fastpath_applicable(g)) continue;
    ++checked;
    EXPECT_EQ(density_fastpath(g), density_exact(g)) << n;
  }
  EXPECT_GT(checked, 100);
}

TEST(OverfullWitness, Examples) {
  const OverfullResult k5 = overfull_witness(mgtest::complete(5));
  EXPECT_EQ(k5.classification, OverfullClass::kOverfull);
  EXPECT_EQ(k5.witness, (std::vector<int>{0, 1, 2, 3, 4}));
  // A 1-regular graph is never overfull; an edge plus a third vertex is
  // Delta-full though.
  Multigraph m(6);
  m.add(0, 1);
  m.add(2, 3);
  m.add(4, 5);
  const OverfullResult one = overfull_witness(m);
  EXPECT_NE(one.classification, OverfullClass::kOverfull);
  EXPECT_EQ(one.classification, OverfullClass::kFull);
  EXPECT_EQ(one.witness, (std::vector<int>{0, 1, 2}));
  Multigraph pstar(9);
  const Multigraph p = mgtest::petersen_by_hand();
  for (const Bundle& b : p.bundles()) {
    if (b.u != 0) pstar.set_mult(b.u - 1, b.v - 1, 1);
  }
  // 12 = 3 * 4 edges on 9 vertices: Delta-full, but no overfull subgraph.
  const OverfullResult ps = overfull_witness(pstar);
  EXPECT_EQ(ps.classification, OverfullClass::kFull);
  EXPECT_EQ(ps.witness.size(), 9U);
}

TEST(OverfullWitness, FullDetected) {
  // K_5 minus two disjoint edges: e = 8 = 4 * 2, and no smaller odd set
  // keeps a degree-4 vertex.
  Multigraph c = mgtest::complete(5);
  c.add(0, 1, -1);
  c.add(2, 3, -1);
  const OverfullResult r = overfull_witness(c);
  EXPECT_EQ(r.classification, OverfullClass::kFull);
  EXPECT_EQ(r.witness, (std::vector<int>{0, 1, 2, 3, 4}));
}

TEST(OverfullDeletions, Examples) {
  EXPECT_EQ(count_overfull_deletions(Multigraph(6)), 0);
  EXPECT_EQ(count_overfull_deletions(mgtest::complete(8, 2)), 0);
  // K_6 minus a perfect matching minus one more edge at vertex 0.
  Multigraph g = mgtest::complete(6);
  g.add(0, 1, -1);
  g.add(2, 3, -1);
  g.add(4, 5, -1);
  g.add(0, 2, -1);
  // Direct count: G - v overfull means Delta(G - v) = 4 and e(G - v) > 8.
  int expected = 0;
  for (int v = 0; v < 6; ++v) {
    std::vector<int> rest;
    for (int w = 0; w < 6; ++w) {
      if (w != v) rest.push_back(w);
    }
    int induced = 0;
    for (int x : rest) {
      int d = 0;
      for (int y : rest) d += g.mult(x, y);
      induced = std::max(induced, d);
    }
    if (induced == g.max_degree() && edges_within(g, rest) > 4 * 2) ++expected;
  }
  EXPECT_EQ(count_overfull_deletions(g), expected);
  EXPECT_THROW(count_overfull_deletions(mgtest::complete(5)), Error);
}

TEST(OverfullDeletions, AtMostOneAndMinimumDegree) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 1200; ++trial) {
    const int n = 4 + 2 * static_cast<int>(rng() % 4);
    const Multigraph g = mgtest::random_multigraph(n, 1 + static_cast<int>(rng() % 3), 0.9, rng);
    EXPECT_LE(count_overfull_deletions(g), 1);
    const int delta = g.max_degree();
    for (int v = 0; v < n; ++v) {
      if (g.edge_count() - g.degree(v) > static_cast<std::int64_t>(delta) * (n - 2) / 2) {
        EXPECT_EQ(g.degree(v), g.min_degree());
      }
    }
    if (!g.is_regular()) {
      const auto full = full_deletions(g);
      EXPECT_LE(full.size(), 2U);
      for (int v : full) EXPECT_EQ(g.degree(v), g.min_degree());
    }
  }
}

TEST(MaxDegreeSet, LargeWhenDeficientVerticesAreSaturated) {
  // Sub-maximum-degree vertices pairwise joined by mu edges force |V_Delta| > n/2.
  std::mt19937_64 rng(4);
  int seen = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 8);
    const int mu = 1 + static_cast<int>(rng() % 3);
    const Multigraph g = mgtest::random_multigraph(n, mu, 0.8, rng);
    if (g.edge_count() == 0) continue;
    const DegreeProfile p = degree_profile(g);
    std::vector<int> low;
    for (int v = 0; v < n; ++v) {
      if (g.degree(v) < p.max_degree) low.push_back(v);
    }
    bool saturated = true;
    for (std::size_t i = 0; i < low.size() && saturated; ++i) {
      for (std::size_t j = i + 1; j < low.size(); ++j) {
        if (g.mult(low[i], low[j]) != p.max_multiplicity) saturated = false;
      }
    }
    if (!saturated) continue;
    ++seen;
    EXPECT_GT(2 * static_cast<int>(p.max_degree_vertices.size()), n);
  }
  EXPECT_GT(seen, 20);
}

}  // namespace
