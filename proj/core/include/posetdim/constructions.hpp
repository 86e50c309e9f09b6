#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "posetdim/dimension.hpp"
#include "posetdim/poset.hpp"

namespace posetdim {

/// Disjoint pairs (u_i, v_i) with u_i in A, v_i in B and u_i || v_i.
struct Matching {
  std::vector<std::pair<Element, Element>> pairs;
};

/// Host of size 4t, t = 5s, split into two standard examples
/// T = {a_i} u {b_i} and T' = {w_i} u {z_i} with no quadruple
/// {a_i, b_i, w_i, z_i} inducing S_2.
struct TwoStandardInstance {
  int s = 0;
  BipartitePoset host;
  StandardExampleEmbedding t_emb;
  StandardExampleEmbedding t2_emb;
};

/// Maximal antichain A whose down set X and up set Y are antichains, with
/// |X| = s and |Y| = s + t.
struct SandwichInstance {
  Poset host;
  ElementSet a;
  ElementSet x;
  ElementSet y;
};

/// Scans A in index order, matching each element to the first free
/// incomparable element of B.
Matching greedy_maximal_matching(const BipartitePoset& bp);
bool is_matching(const BipartitePoset& bp, const Matching& m);

/// The order of `sub` read on the parent indices, extended to all of P with
/// `priority` elements placed as low as possible.
LinearExtension lift_extension(const Poset& p, const std::vector<Element>& parent, const LinearExtension& sub,
                               const std::vector<char>& priority);
/// Restriction of l to the sorted element list `keep`, reindexed 0..|keep|-1.
LinearExtension restrict_extension(const LinearExtension& l, const std::vector<Element>& keep);

/// Lifts a reversing family of P - Q to P and adds L(u_i, v_i, P) for every
/// matched pair. `rest_family` is indexed like subposet(bp, complement(Q)).
std::vector<LinearExtension> realize_matching_reduction(const BipartitePoset& bp, const Matching& m,
                                                        const std::vector<LinearExtension>& rest_family);

/// Reversing family of size m - 1 where m = min(|A|, |B|) >= 2. Throws
/// ContainsSm when P contains S_m.
std::vector<LinearExtension> realize_save_one(const BipartitePoset& bp);

TwoStandardInstance make_two_standard_instance(int s, BipartitePoset host, StandardExampleEmbedding t_emb,
                                               StandardExampleEmbedding t2_emb);
/// Elements laid out as a_i = i, b_i = t + i, w_i = 2t + i, z_i = 3t + i.
TwoStandardInstance two_standard_from_layout(int s, const BipartitePoset& host);
/// Two copies of S_t plus cross relations a_i < z_j and w_i < b_j drawn with
/// probability p; any quadruple that would induce S_2 loses one relation.
TwoStandardInstance random_two_standard_instance(int s, double p, std::uint64_t seed);

enum class TwoStandardBranch { paired, triples, singles };

/// Which part of the construction produced the family: `paired` when s_1 >= s
/// (size 10s - s_1), `triples` when the auxiliary matching has r >= s
/// (size 10s - r), `singles` otherwise (size 7s + 2r).
struct TwoStandardTrace {
  TwoStandardBranch branch = TwoStandardBranch::paired;
  int s1 = 0;
  int r = 0;
};

/// Reversing family of size at most 9s.
std::vector<LinearExtension> realize_two_standard(const TwoStandardInstance& inst,
                                                  TwoStandardTrace* trace = nullptr);

/// Computes X and Y from a maximal antichain A and checks the hypotheses.
SandwichInstance make_sandwich_instance(const Poset& host, ElementSet a);
/// Random instance with |A| = a_size, |X| = s, |Y| = s + t. Every x lies
/// below and every y above some element of A; pairs x, y not forced by
/// transitivity are related with probability p_xy.
SandwichInstance random_sandwich_instance(int a_size, int s, int t, double p, double p_xy, std::uint64_t seed);

int sandwich_bound(int s, int t);
/// Realizer of size at most 1 + t + ceil(4s/3).
std::vector<LinearExtension> realize_sandwich(const SandwichInstance& inst);

}  // namespace posetdim
