#pragma once

#include <optional>
#include <vector>

#include "posetdim/poset.hpp"

namespace posetdim {

/// Pairs (a_1, b_1), ..., (a_k, b_k) with a_i <= b_{i+1} cyclically.
struct AlternatingCycle {
  std::vector<IncPair> pairs;
  bool strict = false;
};

/// Arc i -> j whenever a_i <= b_j.
std::vector<std::vector<int>> pair_digraph(const Poset& p, const IncPairSet& s);

bool is_alternating_cycle(const Poset& p, const std::vector<IncPair>& pairs);
bool is_strict_alternating_cycle(const Poset& p, const std::vector<IncPair>& pairs);

/// A shortest directed cycle of the pair digraph, which is always strict.
std::optional<AlternatingCycle> find_strict_alternating_cycle(const Poset& p, const IncPairSet& s);

bool is_reversible(const Poset& p, const IncPairSet& s);

/// Least-index-first topological sort of P plus b < a for each (a, b) in s.
/// Throws NotReversible when that relation is cyclic.
LinearExtension extension_from_reversible_set(const Poset& p, const IncPairSet& s);

struct MixpairResult {
  LinearExtension extension;
  /// False only when an extra pair was requested and could not be added.
  bool extra_met = true;
};

/// L(a, b, P): reverses a with B and A with b. When `extra` is given and
/// stays compatible, it is reversed as well.
MixpairResult mixpair_extension(const BipartitePoset& bp, Element a, Element b,
                                std::optional<IncPair> extra = std::nullopt);

/// Pairs reversed by L(a, b, P) before any extra request.
IncPairSet mixpair_pairs(const BipartitePoset& bp, Element a, Element b);

/// Reverses (x, u) for every u || x and (v, y) for every v || y.
LinearExtension gen_mixpair_extension(const Poset& p, Element x, Element y);

/// L(a, B, P) and L(A, b, P).
LinearExtension reverse_a_with_b_side(const BipartitePoset& bp, Element a);
LinearExtension reverse_a_side_with_b(const BipartitePoset& bp, Element b);

bool reverses_all(const LinearExtension& l, const IncPairSet& s);

/// Every ordered incomparable pair is reversed by some member. Throws
/// InvalidExtension when a member is not a linear extension of p.
bool verify_realizer(const Poset& p, const std::vector<LinearExtension>& family);
/// Same check restricted to Inc_0.
bool verify_reversing_family(const BipartitePoset& bp, const std::vector<LinearExtension>& family);

}  // namespace posetdim
