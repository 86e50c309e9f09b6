#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "posetdim/enumerate.hpp"
#include "posetdim/errors.hpp"
#include "posetdim/generators.hpp"

namespace posetdim {
namespace {

std::vector<std::vector<Element>> orders(const std::vector<LinearExtension>& family) {
  std::vector<std::vector<Element>> out;
  for (const auto& l : family) out.push_back(l.order());
  return out;
}

TEST(LinearExtensions, ChainAntichainAndStandardExample) {
  EXPECT_EQ(enumerate_linear_extensions(gen_chain(6)).size(), 1u);
  EXPECT_EQ(enumerate_linear_extensions(gen_antichain(4)).size(), 24u);
  const auto s3 = gen_standard_example(3).poset();
  EXPECT_EQ(orders(enumerate_linear_extensions(s3)), oracle::extensions_by_filter(s3));
}

TEST(LinearExtensions, MatchPermutationFilterInLexicographicOrder) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : enumerate_posets(n)) {
      const auto family = enumerate_linear_extensions(p);
      for (const auto& l : family) ASSERT_TRUE(is_linear_extension(p, l));
      ASSERT_EQ(orders(family), oracle::extensions_by_filter(p));
    }
}

TEST(LinearExtensions, CapCarriesPartialCount) {
  try {
    enumerate_linear_extensions(gen_antichain(5), 100);
    FAIL() << "expected CapExceeded";
  } catch (const CapExceeded& e) {
    EXPECT_EQ(e.cap, 100u);
    EXPECT_EQ(e.partial_count, 100u);
  }
  EXPECT_EQ(enumerate_linear_extensions(gen_antichain(5), 120).size(), 120u);
}

TEST(EnumeratePosets, CountsMatchLabelledBruteForce) {
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(enumerate_posets(n).size(), oracle::count_poset_classes(n)) << n;
}

TEST(EnumeratePosets, KnownCountsUpToSeven) {
  const std::size_t expected[] = {1, 1, 2, 5, 16, 63, 318, 2045};
  for (int n = 0; n <= 7; ++n) EXPECT_EQ(enumerate_posets(n).size(), expected[n]) << n;
  EXPECT_THROW(enumerate_posets(8), TooLarge);
}

TEST(EnumeratePosets, NoTwoIsomorphic) {
  for (int n = 1; n <= 5; ++n) {
    std::set<std::vector<bool>> codes;
    for (const auto& p : enumerate_posets(n)) EXPECT_TRUE(codes.insert(oracle::min_code(oracle::matrix_of(p))).second);
  }
}

TEST(Canonical, InvariantUnderRelabelling) {
  std::mt19937_64 rng(23);
  for (int k = 0; k < 40; ++k) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const auto p = oracle::random_poset(n, 0.4, rng);
    std::vector<Element> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Relation> rel;
    for (auto [x, y] : p.relations()) rel.emplace_back(perm[x], perm[y]);
    const auto q = Poset::from_relations(n, rel);
    EXPECT_EQ(canonical_code(p), canonical_code(q));
    EXPECT_TRUE(are_isomorphic(p, q));
    EXPECT_TRUE(oracle::isomorphic(canonical_form(p), p));
  }
  EXPECT_FALSE(are_isomorphic(gen_chain(3), gen_antichain(3)));
}

}  // namespace
}  // namespace posetdim
