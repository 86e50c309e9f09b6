#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "posetdim/dimension.hpp"
#include "posetdim/enumerate.hpp"
#include "posetdim/errors.hpp"
#include "posetdim/fractional.hpp"
#include "posetdim/generators.hpp"

namespace posetdim {
namespace {

BipartitePoset crown_six() {
  // Incomparability graph between A and B is the 6-cycle a0 b0 a1 b1 a2 b2.
  const std::vector<Relation> rel{{0, 5}, {1, 3}, {2, 4}};
  return BipartitePoset(Poset::from_relations(6, rel), ElementSet{0, 1, 2});
}

TEST(Fdim, KnownValues) {
  EXPECT_EQ(fdim_exact(Poset{}).value, 0);
  EXPECT_EQ(fdim_exact(gen_chain(4)).value, 1);
  EXPECT_EQ(fdim_exact(gen_antichain(2)).value, 2);
  for (int d = 2; d <= 4; ++d) EXPECT_EQ(fdim_exact(gen_standard_example(d).poset()).value, d);
}

TEST(Fdim, CertificatesAreOptimal) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const auto p = oracle::random_poset(5, 0.3, rng);
    const auto cert = fdim_exact(p);
    const auto constraints = inc_pairs(p);
    EXPECT_TRUE(verify_frac_certificate(p, constraints, cert));
    if (!constraints.empty())
      EXPECT_TRUE(oracle::certifies_optimum(oracle::extensions_by_filter(p), constraints, cert));
  }
}

TEST(Fdim, BelowDimensionAndMonotone) {
  for (int n = 2; n <= 5; ++n)
    for (const auto& p : enumerate_posets(n)) {
      const Rational f = fdim_exact(p).value;
      EXPECT_LE(f, dim_exact(p).value);
      for (Element x = 0; x < n; ++x) {
        const ElementSet only{x};
        const Rational g = fdim_exact(subposet(p, complement(n, only))).value;
        EXPECT_LE(g, f);
        EXPECT_LE(f, g + 1);
      }
    }
}

TEST(Fdim, CapIsEnforced) {
  EXPECT_THROW(fdim_exact(gen_antichain(6), 10), CapExceeded);
}

TEST(IdimStar, KnownValues) {
  for (int d = 2; d <= 4; ++d) EXPECT_EQ(idim_star_exact(gen_standard_example(d)).value, d);
  EXPECT_EQ(idim_star_exact(gen_random_bipartite(3, 1.0, 1)).value, 0);
  const Rational c6 = idim_star_exact(crown_six()).value;
  EXPECT_EQ(c6, 2);
}

TEST(IdimStar, BelowIdimAndCertified) {
  std::mt19937_64 seeds(43);
  for (int trial = 0; trial < 25; ++trial) {
    const auto bp = gen_random_bipartite(3, 0.5, seeds());
    const auto cert = idim_star_exact(bp);
    EXPECT_LE(cert.value, idim_exact(bp).value);
    const auto constraints = inc0(bp);
    EXPECT_TRUE(verify_frac_certificate(bp.poset(), constraints, cert));
    if (!constraints.empty())
      EXPECT_TRUE(oracle::certifies_optimum(oracle::extensions_by_filter(bp.poset()), constraints, cert));
  }
}

TEST(WeightedFamilies, FracdimFromIdimStar) {
  std::mt19937_64 seeds(47);
  for (int trial = 0; trial < 20; ++trial) {
    const auto bp = gen_random_bipartite(3, 0.5, seeds());
    const auto star = idim_star_exact(bp);
    const auto w = fracdim_from_idimstar(bp, star.primal);
    EXPECT_EQ(w.total(), star.value + 2);
    EXPECT_TRUE(verify_weighted_family(bp.poset(), w, inc_pairs(bp.poset())));
  }
  EXPECT_THROW(fracdim_from_idimstar(gen_standard_example(2), WeightedFamily{}), NotCovering);
}

TEST(WeightedFamilies, MatchingFamilyCoversIncZero) {
  std::mt19937_64 seeds(53);
  for (int trial = 0; trial < 20; ++trial) {
    const auto bp = gen_random_bipartite(4, 0.5, seeds());
    const auto m = greedy_maximal_matching(bp);
    const auto w = matching_family(bp, m);
    EXPECT_EQ(w.total(), static_cast<long>(m.pairs.size()));
    EXPECT_TRUE(verify_weighted_family(bp.poset(), w, inc0(bp)));
  }
}

TEST(WeightedFamilies, VerificationRejects) {
  const auto s2 = gen_standard_example(2);
  WeightedFamily w;
  w.add(LinearExtension({1, 2, 0, 3}), Rational(1, 2));
  EXPECT_FALSE(verify_weighted_family(s2.poset(), w, inc0(s2)));
  WeightedFamily bad;
  bad.add(LinearExtension({2, 0, 1, 3}), 1);
  EXPECT_THROW(verify_weighted_family(s2.poset(), bad, inc0(s2)), InvalidExtension);
}

TEST(WeightedFamilyBipartite, StandardExample) {
  const auto res = weighted_family_bipartite(gen_standard_example(4));
  EXPECT_EQ(res.report.d, 4);
  EXPECT_EQ(res.report.s, 0);
  EXPECT_EQ(res.family.total(), 4);
  EXPECT_EQ(res.family.total(), res.report.formula());
}

TEST(WeightedFamilyBipartite, CrownSix) {
  const auto bp = crown_six();
  const auto res = weighted_family_bipartite(bp);
  EXPECT_EQ(res.report.s, 3);
  EXPECT_EQ(res.report.cycle_edges.size(), 6U);
  EXPECT_EQ(res.family.total(), 2);
  EXPECT_TRUE(verify_weighted_family(bp.poset(), res.family, inc0(bp)));
}

TEST(WeightedFamilyBipartite, RandomInstancesCover) {
  std::mt19937_64 seeds(59);
  for (int trial = 0; trial < 30; ++trial) {
    const auto bp = gen_random_bipartite(4, 0.45, seeds());
    const auto res = weighted_family_bipartite(bp);
    const auto& r = res.report;
    EXPECT_EQ(2 * r.s + 4 * r.r + 2 * r.d + r.q, bp.size());
    EXPECT_EQ(res.family.total(), r.formula());
    EXPECT_TRUE(verify_weighted_family(bp.poset(), res.family, inc0(bp)));
    EXPECT_GE(res.family.total(), idim_star_exact(bp).value);
  }
}

TEST(SandwichBound, Values) {
  const auto a = random_sandwich_instance(3, 3, 0, 0.5, 0.5, 1);
  EXPECT_EQ(fdim_sandwich_bound(a), 5);
  const auto b = random_sandwich_instance(3, 0, 2, 0.5, 0.5, 2);
  EXPECT_EQ(fdim_sandwich_bound(b), 3);
  EXPECT_LE(fdim_exact(b.host).value, 3);
}

}  // namespace
}  // namespace posetdim
