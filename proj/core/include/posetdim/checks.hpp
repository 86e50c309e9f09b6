#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "posetdim/dimension.hpp"
#include "posetdim/enumerate.hpp"

namespace posetdim {

struct CheckSuiteConfig {
  std::uint64_t budget = kDefaultBudget;
  std::size_t cap = kDefaultExtensionCap;
  std::uint64_t seed = 1;

  int hiraguchi_max_n = 7;
  int bounds_max_n = 6;
  int lemma_ac_max_n = 5;
  /// Subsets of at most this many incomparable pairs are enumerated per poset.
  int lemma_ac_max_pairs = 12;
  int fdim_max_n = 5;
  int construction_instances = 200;
  int fractional_instances = 100;
  int claim1_instances = 100;
  /// Largest side of the random bipartite posets in the fractional checks.
  int fractional_max_side = 4;

  /// c in the constants table.
  int c = 1;
  long long f() const { return 3485LL * c * c; }
  long long s_constant() const { return 41LL * c; }
  long long t_constant() const { return 5 * s_constant(); }
  long long bipartite_fractional_constant() const { return 5LL * c + 12; }
  long long general_fractional_constant() const { return 30LL * c + 52; }
};

struct Report {
  /// Acceptance criterion number, 1..10.
  int id = 0;
  std::string tag;
  bool pass = false;
  /// Measured values in a fixed order.
  std::vector<std::pair<std::string, std::string>> measured;
  /// Poset and family in the text formats, set when the check fails.
  std::string witness;
  double elapsed_ms = 0;
};

/// Tags in criterion order: sd-exact, hiraguchi, footnote20, bounds,
/// lemma-ac, constructive, fano, fractional, wfam, claim1.
const std::vector<std::string>& check_tags();

/// Runs every check whose tag (or criterion number) appears in `filter`;
/// an empty filter runs them all. Reports come back ordered by id.
std::vector<Report> run_check_suite(const CheckSuiteConfig& cfg, const std::vector<std::string>& filter = {});

}  // namespace posetdim
