#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "posetdim/poset.hpp"

namespace posetdim {

/// PG(2, q) for prime q. Points and lines are normalized homogeneous
/// coordinate vectors (first nonzero entry 1) in lexicographic order.
struct PlaneIncidence {
  int q = 0;
  std::vector<std::array<int, 3>> points;
  std::vector<std::array<int, 3>> lines;
  /// incidence[i][j]: point i lies on line j.
  std::vector<std::vector<bool>> incidence;
};

struct PlanePoset {
  /// Points are 0..N-1 (side A), lines N..2N-1 (side B); a point is below
  /// exactly the lines that miss it.
  BipartitePoset poset;
  PlaneIncidence plane;
};

bool is_prime(int q);

/// a_i = i and b_j = d + j, with a_i < b_j iff i != j.
BipartitePoset gen_standard_example(int d);
/// 1- and 2-element subsets of {1..n} under inclusion, singletons first.
Poset gen_subsets12(int n);
/// Intervals [a, b] with 1 <= a < b <= n, lexicographic; [a,b] < [c,d] iff b < c.
Poset gen_canonical_interval(int n);
PlaneIncidence projective_plane(int q);
PlanePoset gen_projective_plane(int q);
/// A = 0..n-1, B = n..2n-1. Each (a, b) is related with probability p,
/// sampled from mt19937_64 in row-major order.
BipartitePoset gen_random_bipartite(int n, double p, std::uint64_t seed);
/// S_m on 0..2m-1 followed by the plane poset of order q; the a_i sit below
/// every line and the b_i above every point.
Poset gen_stacked(int m, int q);
Poset gen_chain(int n);
Poset gen_antichain(int n);

}  // namespace posetdim
