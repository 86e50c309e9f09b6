#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "posetdim/constructions.hpp"
#include "posetdim/enumerate.hpp"
#include "posetdim/poset.hpp"
#include "posetdim/rational.hpp"

namespace posetdim {

struct WeightedFamily {
  std::vector<std::pair<LinearExtension, Rational>> members;

  Rational total() const;
  void add(LinearExtension l, const Rational& weight) { members.emplace_back(std::move(l), weight); }
};

/// Optimal value of the covering program together with both certificates.
/// Strong duality reads  value = sum of dual prices + dual_floor.
struct FracCertificate {
  Rational value;
  WeightedFamily primal;
  std::vector<std::pair<IncPair, Rational>> dual;
  /// Price of the extra row "total weight >= 1" that fixes the value of a
  /// chain at 1. Zero whenever some pair is constrained.
  Rational dual_floor;
};

/// dim*(P). Enumerates every linear extension, so throws CapExceeded above
/// `cap` extensions. A chain has value 1 and the empty poset 0.
FracCertificate fdim_exact(const Poset& p, std::size_t cap = kDefaultExtensionCap);

/// Idim*(P): the same program restricted to Inc_0. Zero when Inc_0 is empty.
FracCertificate idim_star_exact(const BipartitePoset& bp, std::size_t cap = kDefaultExtensionCap);

/// Sum of the weights of the members that reverse `pair`.
Rational coverage(const WeightedFamily& w, IncPair pair);

/// True when every weight is non-negative and every constraint is covered
/// with weight at least 1. Throws InvalidExtension for a member that is not
/// a linear extension of p.
bool verify_weighted_family(const Poset& p, const WeightedFamily& w, const IncPairSet& constraints);

/// Checks both certificates against the constraint set, including dual
/// feasibility against every linear extension of p.
bool verify_frac_certificate(const Poset& p, const IncPairSet& constraints, const FracCertificate& cert,
                             std::size_t cap = kDefaultExtensionCap);

/// Appends A < B in index order and A < B with both sides reversed, each at
/// weight 1. Throws NotCovering unless w covers Inc_0.
WeightedFamily fracdim_from_idimstar(const BipartitePoset& bp, const WeightedFamily& w);

/// Weight-1 family L(u_i, v_i, P) over a matching; covers Inc_0 when the
/// matching is maximal.
WeightedFamily matching_family(const BipartitePoset& bp, const Matching& m);

/// Decomposition of the incomparability graph G between A and B:
/// Q_1 a largest union of disjoint cycles (2s vertices), Q_2 a largest set of
/// r disjoint paths v_1 u_1 v_2 u_2 in the rest, Q_3 a maximum matching (d
/// edges) in what remains and the q leftover elements Q_4.
struct WeightedFamilyReport {
  int s = 0;
  int r = 0;
  int d = 0;
  int q = 0;
  /// Edges (a, b) of the cycles.
  std::vector<std::pair<Element, Element>> cycle_edges;
  /// Paths as (u_1, v_1, u_2, v_2) with u_1 || v_1, u_2 || v_2, u_1 || v_2.
  std::vector<std::array<Element, 4>> paths;
  std::vector<std::pair<Element, Element>> matching;
  ElementSet leftover;

  /// 2s/3 + 3r/2 + d + q/2.
  Rational formula() const;
};

struct BipartiteWeightedFamily {
  WeightedFamily family;
  WeightedFamilyReport report;
};

/// Cycles contribute L(a, b, P) at 1/3 per edge, paths the three extensions
/// L(u_1, v_1), L(u_2, v_2), L(u_1, v_2) at 1/2, matched pairs L(a, b, P) at
/// 1 and leftovers L(a, B, P) or L(A, b, P) at 1/2. Maximality is found by
/// exhaustive search, ties broken lexicographically.
BipartiteWeightedFamily weighted_family_bipartite(const BipartitePoset& bp);

/// 1 + t + ceil(4s/3), after checking that realize_sandwich produces a
/// realizer of at most that size.
Rational fdim_sandwich_bound(const SandwichInstance& inst);

}  // namespace posetdim
