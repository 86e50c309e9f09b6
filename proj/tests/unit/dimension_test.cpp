#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "posetdim/dimension.hpp"
#include "posetdim/enumerate.hpp"
#include "posetdim/errors.hpp"
#include "posetdim/generators.hpp"
#include "posetdim/reversibility.hpp"

namespace posetdim {
namespace {

TEST(DimExact, StandardExamples) {
  for (int d = 2; d <= 6; ++d) {
    const auto cert = dim_exact(gen_standard_example(d).poset());
    EXPECT_EQ(cert.value, d);
    EXPECT_EQ(static_cast<int>(cert.realizer.size()), d);
    EXPECT_TRUE(verify_realizer(gen_standard_example(d).poset(), cert.realizer));
  }
}

TEST(DimExact, TrivialPosets) {
  EXPECT_EQ(dim_exact(Poset{}).value, 0);
  EXPECT_EQ(dim_exact(gen_chain(1)).value, 1);
  EXPECT_EQ(dim_exact(gen_chain(4)).value, 1);
  EXPECT_EQ(dim_exact(gen_antichain(3)).value, 2);
}

TEST(DimExact, AgreesWithExtensionCover) {
  const auto p = gen_subsets12(4);
  const auto cert = dim_exact(p);
  // S_3 inside gives the lower bound, a verified realizer the upper one.
  EXPECT_EQ(cert.value, 3);
  EXPECT_EQ(max_standard_example(p).d, 3);
  EXPECT_TRUE(verify_realizer(p, cert.realizer));
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const auto q = oracle::random_poset(7, 0.3, rng);
    const auto c = dim_exact(q);
    EXPECT_EQ(oracle::dim_by_extension_cover(q, 4), c.value);
    EXPECT_TRUE(verify_realizer(q, c.realizer));
  }
}

TEST(DimExact, DualInvariant) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& p : enumerate_posets(n)) EXPECT_EQ(dim_exact(p).value, dim_exact(dual(p)).value);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto p = oracle::random_poset(6, 0.3, rng);
    EXPECT_EQ(dim_exact(p).value, dim_exact(dual(p)).value);
  }
}

TEST(DimExact, WitnessTags) {
  const auto cert = dim_exact(gen_standard_example(4).poset());
  EXPECT_FALSE(cert.witness_tag().empty());
  if (cert.lower_witness == LowerWitness::standard_example) {
    EXPECT_EQ(cert.witness_d, 4);
    EXPECT_EQ(cert.witness_tag(), "standard-example(4)");
  }
}

TEST(DimExact, BudgetIsEnforced) {
  EXPECT_THROW(dim_exact(gen_standard_example(6).poset(), 1), BudgetExceeded);
}

TEST(Idim, BracketsDimension) {
  std::mt19937_64 seeds(2);
  for (int trial = 0; trial < 30; ++trial) {
    const auto bp = gen_random_bipartite(4, 0.6, seeds());
    const int idim = idim_exact(bp).value;
    const int dim = dim_exact(bp.poset()).value;
    EXPECT_LE(idim, dim);
    EXPECT_LE(dim, 1 + std::max(idim, 1));
    EXPECT_TRUE(verify_reversing_family(bp, idim_exact(bp).realizer));
  }
  EXPECT_EQ(idim_exact(gen_random_bipartite(4, 1.0, 1)).value, 0);
  EXPECT_EQ(idim_exact(gen_standard_example(5)).value, 5);
}

TEST(MaxStandardExample, Examples) {
  EXPECT_EQ(max_standard_example(gen_chain(4)).d, 0);
  EXPECT_EQ(max_standard_example(gen_antichain(2)).d, 1);
  for (int d = 2; d <= 6; ++d) {
    const auto e = max_standard_example(gen_standard_example(d).poset());
    EXPECT_EQ(e.d, d);
    EXPECT_TRUE(is_standard_example_embedding(gen_standard_example(d).poset(), e));
  }
  EXPECT_EQ(max_standard_example(gen_canonical_interval(6)).d, 1);
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const auto p = oracle::random_poset(7, 0.35, rng);
    const auto e = max_standard_example(p);
    if (e.d >= 2) EXPECT_TRUE(is_standard_example_embedding(p, e));
    EXPECT_GE(dim_exact(p).value, std::max(e.d, p.is_chain() ? 1 : 2));
  }
}

TEST(IntervalOrder, Recognition) {
  EXPECT_TRUE(is_interval_order(gen_canonical_interval(5)));
  EXPECT_TRUE(is_interval_order(gen_chain(3)));
  EXPECT_FALSE(is_interval_order(gen_standard_example(2).poset()));
  EXPECT_FALSE(is_interval_order(gen_subsets12(3)));
}

TEST(Augment, HallViolatorMergesIntoLargerExample) {
  const auto s5 = gen_standard_example(5).poset();
  const StandardExampleEmbedding t{3, {0, 1, 2}, {5, 6, 7}};
  const StandardExampleEmbedding t2{2, {3, 4}, {8, 9}};
  const auto res = augment_standard_example(s5, t, t2);
  EXPECT_FALSE(res.matching.has_value());
  ASSERT_TRUE(res.larger.has_value());
  EXPECT_EQ(res.larger->d, 5);
  EXPECT_TRUE(is_standard_example_embedding(s5, *res.larger));
}

TEST(Augment, DisjointCopiesMatch) {
  const std::vector<Relation> rel{{0, 3}, {1, 2}, {4, 7}, {5, 6}};
  const auto p = Poset::from_relations(8, rel);
  const StandardExampleEmbedding t{2, {0, 1}, {2, 3}};
  const StandardExampleEmbedding t2{2, {4, 5}, {6, 7}};
  const auto res = augment_standard_example(p, t, t2);
  ASSERT_TRUE(res.matching.has_value());
  EXPECT_EQ(res.matching->size(), 2U);
  EXPECT_FALSE(res.larger.has_value());
}

TEST(Augment, RejectsBadEmbeddings) {
  const auto s3 = gen_standard_example(3).poset();
  const StandardExampleEmbedding t{2, {0, 1}, {3, 4}};
  EXPECT_THROW(augment_standard_example(s3, t, t), InvalidEmbedding);
  const StandardExampleEmbedding bad{2, {0, 3}, {1, 4}};
  EXPECT_THROW(augment_standard_example(s3, t, bad), InvalidEmbedding);
}

TEST(Augment, StackedPlaneGrowsExample) {
  const auto p = gen_stacked(3, 2);
  const StandardExampleEmbedding t{3, {0, 1, 2}, {3, 4, 5}};
  const auto inner = max_standard_example(subposet(p, std::vector<Element>{6, 7, 8, 9, 10, 11, 12, 13, 14, 15,
                                                                         16, 17, 18, 19}));
  StandardExampleEmbedding t2{inner.d, {}, {}};
  for (Element x : inner.mins) t2.mins.push_back(x + 6);
  for (Element x : inner.maxs) t2.maxs.push_back(x + 6);
  const auto res = augment_standard_example(p, t, t2);
  ASSERT_TRUE(res.larger.has_value());
  EXPECT_EQ(res.larger->d, 6);
  EXPECT_TRUE(is_standard_example_embedding(p, *res.larger));
}

}  // namespace
}  // namespace posetdim
