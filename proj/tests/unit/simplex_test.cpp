#include <gtest/gtest.h>

#include <random>

#include "posetdim/errors.hpp"
#include "posetdim/simplex.hpp"

namespace posetdim {
namespace {

Rational q(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Primal covers, duals are feasible, and both objectives agree.
void expect_optimal(int rows, const std::vector<std::vector<int>>& columns, const CoveringLpSolution& sol) {
  ASSERT_EQ(sol.x.size(), columns.size());
  ASSERT_EQ(sol.y.size(), static_cast<std::size_t>(rows));
  std::vector<Rational> cover(rows);
  Rational primal = 0, dual = 0;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    EXPECT_GE(sol.x[j], 0);
    primal += sol.x[j];
    Rational load = 0;
    for (int r : columns[j]) {
      cover[r] += sol.x[j];
      load += sol.y[r];
    }
    EXPECT_LE(load, 1);
  }
  for (int r = 0; r < rows; ++r) {
    EXPECT_GE(cover[r], 1);
    EXPECT_GE(sol.y[r], 0);
    dual += sol.y[r];
  }
  EXPECT_EQ(primal, sol.value);
  EXPECT_EQ(dual, sol.value);
}

TEST(CoveringLp, TriangleIsThreeHalves) {
  const std::vector<std::vector<int>> cols{{0, 1}, {1, 2}, {0, 2}};
  const auto sol = solve_covering_lp(3, cols);
  EXPECT_EQ(sol.value, q(3, 2));
  expect_optimal(3, cols, sol);
}

TEST(CoveringLp, FiveCycleIsFiveHalves) {
  std::vector<std::vector<int>> cols;
  for (int i = 0; i < 5; ++i) cols.push_back({i, (i + 1) % 5});
  const auto sol = solve_covering_lp(5, cols);
  EXPECT_EQ(sol.value, q(5, 2));
  expect_optimal(5, cols, sol);
}

TEST(CoveringLp, Degenerate) {
  EXPECT_EQ(solve_covering_lp(0, {}).value, 0);
  const std::vector<std::vector<int>> cols{{0, 1, 2}, {0}, {1}};
  const auto sol = solve_covering_lp(3, cols);
  EXPECT_EQ(sol.value, 1);
  expect_optimal(3, cols, sol);
  EXPECT_THROW(solve_covering_lp(2, {{0}}), NotCovering);
}

TEST(CoveringLp, RandomInstancesCertifyThemselves) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const int rows = 2 + static_cast<int>(rng() % 7);
    const int ncols = 2 + static_cast<int>(rng() % 9);
    std::vector<std::vector<int>> cols(ncols);
    for (auto& c : cols)
      for (int r = 0; r < rows; ++r)
        if (rng() % 3 == 0) c.push_back(r);
    for (int r = 0; r < rows; ++r) cols[rng() % ncols].push_back(r);
    for (auto& c : cols) {
      std::sort(c.begin(), c.end());
      c.erase(std::unique(c.begin(), c.end()), c.end());
    }
    expect_optimal(rows, cols, solve_covering_lp(rows, cols));
  }
}

}  // namespace
}  // namespace posetdim
