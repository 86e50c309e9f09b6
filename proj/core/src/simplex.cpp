#include "posetdim/simplex.hpp"

#include "posetdim/errors.hpp"

namespace posetdim {

std::string to_string(const Rational& q) { return q.get_str(); }
double to_double(const Rational& q) { return q.get_d(); }

namespace {

// Variables: columns 0..n-1, surplus n..n+m-1 (column -e_i), artificial
// n+m..n+2m-1 (column e_i).
class RevisedSimplex {
 public:
  RevisedSimplex(int rows, const std::vector<std::vector<int>>& columns)
      : m_(rows), n_(static_cast<int>(columns.size())), columns_(columns) {
    binv_.assign(m_, std::vector<Rational>(m_, 0));
    for (int i = 0; i < m_; ++i) binv_[i][i] = 1;
    basis_.resize(m_);
    for (int i = 0; i < m_; ++i) basis_[i] = n_ + m_ + i;
    xb_.assign(m_, 1);
  }

  CoveringLpSolution solve() {
    phase_ = 1;
    iterate();
    for (int i = 0; i < m_; ++i)
      if (is_artificial(basis_[i]) && xb_[i] != 0) throw NotCovering("some constraint is covered by no column");
    drive_out_artificials();
    phase_ = 2;
    iterate();

    CoveringLpSolution out;
    out.x.assign(n_, 0);
    for (int i = 0; i < m_; ++i)
      if (basis_[i] < n_) out.x[basis_[i]] = xb_[i];
    out.y = duals();
    out.value = 0;
    for (const auto& v : out.x) out.value += v;
    return out;
  }

 private:
  bool is_artificial(int j) const { return j >= n_ + m_; }

  Rational cost(int j) const {
    if (phase_ == 1) return is_artificial(j) ? 1 : 0;
    return j < n_ ? 1 : 0;
  }

  std::vector<Rational> duals() const {
    std::vector<Rational> y(m_, 0);
    for (int i = 0; i < m_; ++i) {
      const Rational c = cost(basis_[i]);
      if (c == 0) continue;
      for (int k = 0; k < m_; ++k) y[k] += c * binv_[i][k];
    }
    return y;
  }

  Rational reduced_cost(int j, const std::vector<Rational>& y) const {
    Rational d = cost(j);
    if (j < n_) {
      for (int i : columns_[j]) d -= y[i];
    } else {
      d += y[j - n_];
    }
    return d;
  }

  std::vector<Rational> direction(int j) const {
    std::vector<Rational> u(m_, 0);
    for (int r = 0; r < m_; ++r) {
      if (j < n_) {
        for (int i : columns_[j]) u[r] += binv_[r][i];
      } else {
        u[r] = -binv_[r][j - n_];
      }
    }
    return u;
  }

  void pivot(int r, int j, const std::vector<Rational>& u) {
    const Rational piv = u[r];
    for (int k = 0; k < m_; ++k) binv_[r][k] /= piv;
    xb_[r] /= piv;
    for (int i = 0; i < m_; ++i) {
      if (i == r || u[i] == 0) continue;
      const Rational f = u[i];
      for (int k = 0; k < m_; ++k) binv_[i][k] -= f * binv_[r][k];
      xb_[i] -= f * xb_[r];
    }
    basis_[r] = j;
  }

  void iterate() {
    for (;;) {
      const auto y = duals();
      int entering = -1;
      for (int j = 0; j < n_ + m_ && entering < 0; ++j)
        if (reduced_cost(j, y) < 0) entering = j;
      if (entering < 0) return;
      const auto u = direction(entering);
      int leave = -1;
      Rational best;
      for (int r = 0; r < m_; ++r) {
        if (u[r] <= 0) continue;
        Rational ratio = xb_[r] / u[r];
        if (leave < 0 || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave < 0) throw Error("internal: covering program reported unbounded");
      pivot(leave, entering, u);
    }
  }

  void drive_out_artificials() {
    for (int r = 0; r < m_; ++r) {
      if (!is_artificial(basis_[r])) continue;
      for (int j = 0; j < n_ + m_; ++j) {
        const auto u = direction(j);
        if (u[r] != 0) {
          pivot(r, j, u);
          break;
        }
      }
    }
  }

  int m_;
  int n_;
  const std::vector<std::vector<int>>& columns_;
  int phase_ = 1;
  std::vector<std::vector<Rational>> binv_;
  std::vector<int> basis_;
  std::vector<Rational> xb_;
};

}  // namespace

CoveringLpSolution solve_covering_lp(int rows, const std::vector<std::vector<int>>& columns) {
  if (rows == 0) return {Rational(0), std::vector<Rational>(columns.size(), 0), {}};
  return RevisedSimplex(rows, columns).solve();
}

}  // namespace posetdim
