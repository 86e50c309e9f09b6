#include <gtest/gtest.h>

#include "posetdim/checks.hpp"
#include "posetdim/errors.hpp"

namespace posetdim {
namespace {

CheckSuiteConfig quick() {
  CheckSuiteConfig cfg;
  cfg.hiraguchi_max_n = 5;
  cfg.bounds_max_n = 4;
  cfg.lemma_ac_max_n = 4;
  cfg.fdim_max_n = 4;
  cfg.construction_instances = 10;
  cfg.fractional_instances = 10;
  cfg.claim1_instances = 5;
  return cfg;
}

TEST(CheckSuite, TagsInOrder) {
  const auto& tags = check_tags();
  ASSERT_EQ(tags.size(), 10U);
  EXPECT_EQ(tags.front(), "sd-exact");
  EXPECT_EQ(tags.back(), "claim1");
}

TEST(CheckSuite, FilterByTagAndNumber) {
  const auto by_tag = run_check_suite(quick(), {"fano"});
  ASSERT_EQ(by_tag.size(), 1U);
  EXPECT_EQ(by_tag[0].id, 7);
  EXPECT_TRUE(by_tag[0].pass);
  const auto by_number = run_check_suite(quick(), {"1", "hiraguchi"});
  ASSERT_EQ(by_number.size(), 2U);
  EXPECT_EQ(by_number[0].id, 1);
  EXPECT_EQ(by_number[1].id, 2);
  EXPECT_THROW(run_check_suite(quick(), {"nope"}), Error);
}

TEST(CheckSuite, QuickRunPassesScaledChecks) {
  for (const auto& r : run_check_suite(quick(), {"bounds", "lemma-ac", "constructive", "fractional", "wfam", "claim1"})) {
    EXPECT_TRUE(r.pass) << r.tag << "\n" << r.witness;
    EXPECT_FALSE(r.measured.empty()) << r.tag;
  }
}

TEST(CheckSuite, Deterministic) {
  const auto a = run_check_suite(quick(), {"constructive"});
  const auto b = run_check_suite(quick(), {"constructive"});
  ASSERT_EQ(a.size(), 1U);
  EXPECT_EQ(a[0].measured, b[0].measured);
}

}  // namespace
}  // namespace posetdim
