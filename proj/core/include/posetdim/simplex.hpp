#pragma once

#include <vector>

#include "posetdim/rational.hpp"

namespace posetdim {

struct CoveringLpSolution {
  Rational value;
  /// Weight of every column.
  std::vector<Rational> x;
  /// Optimal dual price of every row.
  std::vector<Rational> y;
};

/// Exact solution of  min sum x  subject to  sum_{j covers i} x_j >= 1 for
/// every row i, x >= 0. columns[j] lists the rows covered by column j.
/// Two-phase revised simplex with Bland's rule. Throws NotCovering when
/// some row is covered by no column.
CoveringLpSolution solve_covering_lp(int rows, const std::vector<std::vector<int>>& columns);

}  // namespace posetdim
