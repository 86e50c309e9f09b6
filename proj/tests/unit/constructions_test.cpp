#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "posetdim/constructions.hpp"
#include "posetdim/dimension.hpp"
#include "posetdim/errors.hpp"
#include "posetdim/generators.hpp"
#include "posetdim/reversibility.hpp"

namespace posetdim {
namespace {

TEST(Matching, GreedyIsMaximal) {
  std::mt19937_64 seeds(4);
  for (int trial = 0; trial < 30; ++trial) {
    const auto bp = gen_random_bipartite(5, 0.5, seeds());
    const auto m = greedy_maximal_matching(bp);
    ASSERT_TRUE(is_matching(bp, m));
    std::vector<char> used(bp.size(), 0);
    for (auto [u, v] : m.pairs) used[u] = used[v] = 1;
    for (Element a : bp.a_side())
      for (Element b : bp.b_side())
        if (!used[a] && !used[b]) EXPECT_FALSE(bp.poset().incomparable(a, b));
  }
  const auto s2 = gen_standard_example(2);
  EXPECT_FALSE(is_matching(s2, Matching{{{0, 3}}}));
  EXPECT_FALSE(is_matching(s2, Matching{{{0, 2}, {1, 2}}}));
}

TEST(Matching, ReductionBuildsReversingFamily) {
  std::mt19937_64 seeds(8);
  for (int trial = 0; trial < 25; ++trial) {
    const auto bp = gen_random_bipartite(5, 0.6, seeds());
    auto m = greedy_maximal_matching(bp);
    if (m.pairs.size() > 1) m.pairs.pop_back();
    std::vector<char> used(bp.size(), 0);
    for (auto [u, v] : m.pairs) used[u] = used[v] = 1;
    ElementSet rest;
    for (Element x = 0; x < bp.size(); ++x)
      if (!used[x]) rest.push_back(x);
    const auto sub = subposet(bp, rest);
    const auto rest_family = idim_exact(sub).realizer;
    const auto family = realize_matching_reduction(bp, m, rest_family);
    EXPECT_EQ(family.size(), rest_family.size() + m.pairs.size());
    EXPECT_TRUE(verify_reversing_family(bp, family));
    for (const auto& l : family) EXPECT_TRUE(is_linear_extension(bp.poset(), l));
  }
}

TEST(Matching, ReductionRejectsBadInput) {
  const auto s3 = gen_standard_example(3);
  EXPECT_THROW(realize_matching_reduction(s3, Matching{{{0, 4}}}, {}), NotIncomparable);
  EXPECT_THROW(realize_matching_reduction(s3, Matching{{{0, 3}}}, {}), NotReversingRest);
}

TEST(RestrictExtension, Reindexes) {
  const LinearExtension l({3, 0, 2, 1});
  EXPECT_EQ(restrict_extension(l, {1, 3}).order(), (std::vector<Element>{1, 0}));
}

TEST(SaveOne, SizeIsOneBelowSide) {
  std::mt19937_64 seeds(12);
  int built = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto bp = gen_random_bipartite(4, 0.5, seeds());
    try {
      const auto family = realize_save_one(bp);
      EXPECT_EQ(family.size(), 3U);
      EXPECT_TRUE(verify_reversing_family(bp, family));
      EXPECT_LT(max_standard_example(bp.poset()).d, 4);
      ++built;
    } catch (const ContainsSm&) {
      EXPECT_GE(max_standard_example(bp.poset()).d, 4);
    }
  }
  EXPECT_GT(built, 0);
  EXPECT_THROW(realize_save_one(gen_standard_example(3)), ContainsSm);
  const ElementSet one{0};
  EXPECT_THROW(realize_save_one(BipartitePoset(gen_antichain(3), one)), HypothesisViolated);
}

TEST(TwoStandard, RandomInstancesStayWithinNineS) {
  for (int s : {1, 2})
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
      const auto inst = random_two_standard_instance(s, 0.3, seed);
      TwoStandardTrace trace;
      const auto family = realize_two_standard(inst, &trace);
      EXPECT_LE(static_cast<int>(family.size()), 9 * s);
      EXPECT_TRUE(verify_reversing_family(inst.host, family));
    }
}

TEST(TwoStandard, RejectsInducedTwoStandard) {
  const auto inst = random_two_standard_instance(1, 0.0, 1);
  std::vector<Relation> rel = inst.host.poset().relations();
  rel.emplace_back(0, 15);
  rel.emplace_back(10, 5);
  const BipartitePoset host(Poset::from_relations(20, rel), inst.host.a_side());
  EXPECT_THROW(two_standard_from_layout(1, host), HypothesisViolated);
  EXPECT_THROW(two_standard_from_layout(2, inst.host), HypothesisViolated);
}

TEST(Sandwich, BoundValues) {
  EXPECT_EQ(sandwich_bound(0, 2), 3);
  EXPECT_EQ(sandwich_bound(3, 0), 5);
  EXPECT_EQ(sandwich_bound(1, 1), 4);
  EXPECT_EQ(sandwich_bound(2, 0), 4);
}

TEST(Sandwich, RandomInstancesRealized) {
  std::uint64_t seed = 1;
  for (int s = 0; s <= 3; ++s)
    for (int t = 0; t <= 2; ++t) {
      if (s + t == 0) continue;
      for (int rep = 0; rep < 3; ++rep) {
        const auto inst = random_sandwich_instance(3, s, t, 0.5, 0.5, seed++);
        EXPECT_EQ(static_cast<int>(inst.x.size()), s);
        EXPECT_EQ(static_cast<int>(inst.y.size()), s + t);
        const auto family = realize_sandwich(inst);
        EXPECT_LE(static_cast<int>(family.size()), sandwich_bound(s, t));
        EXPECT_TRUE(verify_realizer(inst.host, family));
        if (inst.host.size() <= 9) EXPECT_LE(dim_exact(inst.host).value, static_cast<int>(family.size()));
      }
    }
}

TEST(Sandwich, HypothesesChecked) {
  const auto s2 = gen_standard_example(2).poset();
  EXPECT_THROW(make_sandwich_instance(s2, {0}), HypothesisViolated);
  EXPECT_THROW(make_sandwich_instance(gen_antichain(3), {0, 1, 2}), HypothesisViolated);
  const auto inst = make_sandwich_instance(gen_chain(3), {1});
  EXPECT_EQ(inst.x, ElementSet{0});
  EXPECT_EQ(inst.y, ElementSet{2});
  EXPECT_TRUE(verify_realizer(inst.host, realize_sandwich(inst)));
}

}  // namespace
}  // namespace posetdim
