#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "posetdim/poset.hpp"

namespace posetdim {

inline constexpr std::uint64_t kDefaultBudget = 200'000'000;

enum class LowerWitness { exhausted_search, standard_example, width_argument };

struct DimensionCertificate {
  int value = 0;
  std::vector<LinearExtension> realizer;
  LowerWitness lower_witness = LowerWitness::exhausted_search;
  /// Size of the standard example behind a standard_example witness.
  int witness_d = 0;
  /// "exhausted-search", "standard-example(d)" or "width-argument".
  std::string witness_tag() const;
};

/// a_i < b_j iff i != j, and a_i || b_i.
struct StandardExampleEmbedding {
  int d = 0;
  ElementSet mins;
  ElementSet maxs;
};

bool is_standard_example_embedding(const Poset& p, const StandardExampleEmbedding& e);

struct BoundEntry {
  std::string rule;
  int value = 0;
};

struct UpperBounds {
  std::vector<BoundEntry> entries;
  int minimum = 0;
};

/// Width, point removal, Min/Max removal, maximal antichain, down-set and
/// min-max pair removal bounds, with dual forms tagged by a trailing '*'.
/// Subposet dimensions inside the rules are replaced by simple_upper_bound.
UpperBounds dim_upper_bounds(const Poset& p);

/// Minimum of the rules that need no recursion: width, Min/Max removal and
/// the maximum antichain / Min / Max antichain rules. 0 on the empty poset,
/// 1 on a chain.
int simple_upper_bound(const Poset& p);

/// Least k such that `pairs` splits into k reversible sets, searched only
/// for k exactly. Returns the class of each pair, or nullopt when k does not
/// suffice. Throws BudgetExceeded(k, k) when more than `budget` nodes are
/// expanded. Requires size() <= 64.
std::optional<std::vector<int>> reversible_partition(const Poset& p, const IncPairSet& pairs, int k,
                                                     std::uint64_t budget = kDefaultBudget);

/// Exact dimension with a realizer. The search colours critical pairs: a
/// family reversing every critical pair already reverses all of Inc(P).
DimensionCertificate dim_exact(const Poset& p, std::uint64_t budget = kDefaultBudget);

/// Least number of reversible sets covering Inc_0; the realizer field holds a
/// reversing family. 0 when Inc_0 is empty.
DimensionCertificate idim_exact(const BipartitePoset& bp, std::uint64_t budget = kDefaultBudget);

/// Largest embedded standard example (d = 1 for any incomparable pair, 0 on
/// a chain). Throws BudgetExceeded(best, bound).
StandardExampleEmbedding max_standard_example(const Poset& p, std::uint64_t budget = kDefaultBudget);

bool is_interval_order(const Poset& p);

struct AugmentResult {
  /// matching[i] is the index j of the pair of t matched to pair i of t2.
  std::optional<std::vector<int>> matching;
  std::optional<StandardExampleEmbedding> larger;
};

/// Pair i of t2 may be matched to pair j of t unless {w_i, z_i, a_j, b_j}
/// induces S_2. Without a matching that saturates t2, the Hall violator S
/// with neighbourhood N(S) yields the embedding (t - N(S)) + S.
AugmentResult augment_standard_example(const Poset& p, const StandardExampleEmbedding& t,
                                       const StandardExampleEmbedding& t2);

}  // namespace posetdim
