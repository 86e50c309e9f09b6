#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "posetdim/dimension.hpp"
#include "posetdim/errors.hpp"
#include "posetdim/generators.hpp"

namespace posetdim {
namespace {

TEST(StandardExample, SmallCases) {
  const std::vector<Relation> two_chains{{0, 1}, {2, 3}};
  EXPECT_TRUE(oracle::isomorphic(gen_standard_example(2).poset(), Poset::from_relations(4, two_chains)));
  const auto s1 = gen_standard_example(1);
  EXPECT_EQ(s1.size(), 2);
  EXPECT_TRUE(s1.poset().incomparable(0, 1));
}

TEST(StandardExample, CrossRelation) {
  const int d = 4;
  const auto bp = gen_standard_example(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) EXPECT_EQ(bp.poset().less(i, d + j), i != j);
  EXPECT_EQ(bp.a_side(), (ElementSet{0, 1, 2, 3}));
}

TEST(Subsets12, Structure) {
  EXPECT_TRUE(oracle::isomorphic(gen_subsets12(3), gen_standard_example(3).poset()));
  const auto p = gen_subsets12(4);
  EXPECT_EQ(p.size(), 10);
  EXPECT_EQ(height(p), 2);
  EXPECT_EQ(width(p), 6);
  for (int n : {4, 5}) EXPECT_EQ(max_standard_example(gen_subsets12(n)).d, 3) << n;
}

TEST(CanonicalInterval, Structure) {
  const auto i3 = gen_canonical_interval(3);
  EXPECT_EQ(i3.size(), 3);
  EXPECT_TRUE(i3.is_antichain());
  EXPECT_EQ(dim_exact(i3).value, 2);
  for (int n = 2; n <= 6; ++n) {
    const auto p = gen_canonical_interval(n);
    EXPECT_EQ(p.size(), n * (n - 1) / 2);
    EXPECT_TRUE(is_interval_order(p)) << n;
  }
}

TEST(ProjectivePlane, Axioms) {
  for (int q : {2, 3, 5}) {
    const auto plane = projective_plane(q);
    const int n = q * q + q + 1;
    ASSERT_EQ(static_cast<int>(plane.points.size()), n);
    ASSERT_EQ(static_cast<int>(plane.lines.size()), n);
    for (int j = 0; j < n; ++j) {
      int on = 0;
      for (int i = 0; i < n; ++i) on += plane.incidence[i][j];
      EXPECT_EQ(on, q + 1);
    }
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y) {
        int common = 0;
        for (int j = 0; j < n; ++j) common += plane.incidence[x][j] && plane.incidence[y][j];
        EXPECT_EQ(common, 1);
      }
  }
  EXPECT_THROW(projective_plane(4), NotPrime);
  EXPECT_THROW(gen_projective_plane(6), NotPrime);
}

TEST(ProjectivePlane, FanoPoset) {
  const auto fano = gen_projective_plane(2);
  const Poset& p = fano.poset.poset();
  EXPECT_EQ(p.size(), 14);
  for (Element line : fano.poset.b_side()) EXPECT_EQ(p.down_degree(line), 4);
  const auto se = max_standard_example(p);
  EXPECT_EQ(se.d, 3);
  EXPECT_LE(se.d, 2 * std::sqrt(2.0) + 1);
}

TEST(ProjectivePlane, NonIncidentSetsBoundedByQCubed) {
  const int q = 2, n = 7;
  const auto plane = projective_plane(q);
  for (unsigned mask = 1; mask < (1U << n); ++mask) {
    int points = 0, lines = 0;
    for (int i = 0; i < n; ++i) points += (mask >> i) & 1U;
    for (int j = 0; j < n; ++j) {
      bool misses = true;
      for (int i = 0; i < n; ++i)
        if ((mask >> i & 1U) && plane.incidence[i][j]) misses = false;
      lines += misses;
    }
    EXPECT_LE(points * lines, q * q * q);
  }
}

TEST(RandomBipartite, ExtremesAndDeterminism) {
  EXPECT_TRUE(gen_random_bipartite(4, 0.0, 1).poset().is_antichain());
  const auto full = gen_random_bipartite(3, 1.0, 1);
  EXPECT_TRUE(inc0(full).empty());
  EXPECT_EQ(dim_exact(full.poset()).value, 2);
  EXPECT_EQ(gen_random_bipartite(6, 0.4, 99).poset(), gen_random_bipartite(6, 0.4, 99).poset());
}

TEST(Stacked, Structure) {
  const auto p1 = gen_stacked(1, 2);
  EXPECT_EQ(p1.size(), 16);
  EXPECT_TRUE(p1.incomparable(0, 1));
  const auto p3 = gen_stacked(3, 2);
  EXPECT_GE(max_standard_example(p3).d, 6);
  EXPECT_EQ(height(p3), 2);
  EXPECT_THROW(gen_stacked(1, 4), NotPrime);
}

TEST(ChainAntichain, Dimension) {
  EXPECT_EQ(dim_exact(gen_chain(5)).value, 1);
  EXPECT_EQ(dim_exact(gen_antichain(5)).value, 2);
  EXPECT_EQ(width(gen_antichain(7)), 7);
}

}  // namespace
}  // namespace posetdim
