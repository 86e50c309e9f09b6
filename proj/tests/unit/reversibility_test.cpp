#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "posetdim/enumerate.hpp"
#include "posetdim/errors.hpp"
#include "posetdim/generators.hpp"
#include "posetdim/reversibility.hpp"

namespace posetdim {
namespace {

// Brute force: some linear extension reverses every pair of s.
bool reversible_by_search(const Poset& p, const IncPairSet& s) {
  for (const auto& order : oracle::extensions_by_filter(p)) {
    const LinearExtension l(order);
    if (reverses_all(l, s)) return true;
  }
  return false;
}

TEST(AlternatingCycle, StandardExampleTwo) {
  const auto s2 = gen_standard_example(2);
  const IncPairSet s{{0, 2}, {1, 3}};
  EXPECT_FALSE(is_reversible(s2.poset(), s));
  const auto cycle = find_strict_alternating_cycle(s2.poset(), s);
  ASSERT_TRUE(cycle.has_value());
  EXPECT_TRUE(cycle->strict);
  EXPECT_EQ(cycle->pairs.size(), 2U);
  EXPECT_TRUE(is_strict_alternating_cycle(s2.poset(), cycle->pairs));
  EXPECT_THROW(extension_from_reversible_set(s2.poset(), s), NotReversible);
}

TEST(AlternatingCycle, SinglePairNeverCycles) {
  const auto p = gen_antichain(2);
  const IncPairSet s{{0, 1}};
  EXPECT_TRUE(is_reversible(p, s));
  EXPECT_FALSE(find_strict_alternating_cycle(p, s).has_value());
  const auto l = extension_from_reversible_set(p, s);
  EXPECT_TRUE(l.reverses({0, 1}));
}

TEST(AlternatingCycle, MatchesBruteForceOnRandomPosets) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const auto p = oracle::random_poset(6, 0.3, rng);
    const auto all = inc_pairs(p);
    if (all.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int round = 0; round < 5; ++round) {
      IncPairSet s;
      for (int k = 0; k < 4; ++k) s.push_back(all[pick(rng)]);
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
      const bool expected = reversible_by_search(p, s);
      EXPECT_EQ(is_reversible(p, s), expected);
      EXPECT_EQ(oracle::has_alternating_cycle(p, s, false), !expected);
      EXPECT_EQ(oracle::has_alternating_cycle(p, s, true), !expected);
      const auto cycle = find_strict_alternating_cycle(p, s);
      EXPECT_EQ(cycle.has_value(), !expected);
      if (cycle) {
        EXPECT_TRUE(is_strict_alternating_cycle(p, cycle->pairs));
      } else {
        const auto l = extension_from_reversible_set(p, s);
        EXPECT_TRUE(is_linear_extension(p, l));
        EXPECT_TRUE(reverses_all(l, s));
      }
    }
  }
}

TEST(AlternatingCycle, StrictCycleEndsFormAntichains) {
  const auto s4 = gen_standard_example(4);
  IncPairSet s;
  for (int i = 0; i < 4; ++i) s.push_back({i, 4 + i});
  const auto cycle = find_strict_alternating_cycle(s4.poset(), s);
  ASSERT_TRUE(cycle.has_value());
  ElementSet as, bs;
  for (auto pr : cycle->pairs) {
    as.push_back(pr.a);
    bs.push_back(pr.b);
  }
  std::sort(as.begin(), as.end());
  std::sort(bs.begin(), bs.end());
  EXPECT_TRUE(is_antichain(s4.poset(), as));
  EXPECT_TRUE(is_antichain(s4.poset(), bs));
}

TEST(Mixpair, ReversesExpectedPairs) {
  const auto bp = gen_standard_example(3);
  const auto res = mixpair_extension(bp, 0, 3);
  EXPECT_TRUE(res.extra_met);
  EXPECT_TRUE(is_linear_extension(bp.poset(), res.extension));
  const auto pairs = mixpair_pairs(bp, 0, 3);
  EXPECT_TRUE(reverses_all(res.extension, pairs));
  EXPECT_TRUE(res.extension.reverses({0, 3}));
  EXPECT_TRUE(res.extension.reverses({3, 0}) == false);
}

TEST(Mixpair, UnmetExtraIsReported) {
  const auto bp = gen_standard_example(2);
  // L(a_0, b_0) places a_0 above b_0, so (b_0, a_0) cannot follow.
  const auto res = mixpair_extension(bp, 0, 2, IncPair{2, 0});
  EXPECT_FALSE(res.extra_met);
  EXPECT_TRUE(is_linear_extension(bp.poset(), res.extension));
}

TEST(Mixpair, GeneralFormReversesNeighbourhoods) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = oracle::random_poset(6, 0.35, rng);
    for (auto [x, y] : oracle::incomparable_pairs(p)) {
      if (p.down_mask(x) & ~p.down_mask(y)) continue;
      if (p.up_mask(y) & ~p.up_mask(x)) continue;
      const auto l = gen_mixpair_extension(p, x, y);
      EXPECT_TRUE(is_linear_extension(p, l));
      EXPECT_TRUE(l.reverses({x, y}));
    }
  }
}

TEST(Realizer, Verification) {
  const auto s2 = gen_standard_example(2).poset();
  const LinearExtension l1({1, 2, 0, 3});
  const LinearExtension l2({0, 3, 1, 2});
  EXPECT_TRUE(verify_realizer(s2, {l1, l2}));
  EXPECT_FALSE(verify_realizer(s2, {l1}));
  EXPECT_THROW(verify_realizer(s2, {LinearExtension({2, 0, 1, 3})}), InvalidExtension);
  EXPECT_TRUE(verify_realizer(gen_chain(3), {topological_sort(gen_chain(3))}));
  EXPECT_TRUE(verify_reversing_family(gen_standard_example(2), {l1, l2}));
}

}  // namespace
}  // namespace posetdim
