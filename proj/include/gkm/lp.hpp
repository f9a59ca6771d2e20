#pragma once

// Small dense exact-rational simplex (two-phase, Bland's rule). Instance
// sizes here are tiny (tens of columns), so no effort is spent on sparsity;
// what matters is exactness and deterministic pivoting.

#include <vector>

#include "gkm/numeric.hpp"

namespace gkm {

struct LPResult {
  bool feasible = false;
  Rational objective = 0;
  std::vector<Rational> solution;
};

namespace detail {

// Simplex sweep on a tableau whose last row is the objective (reduced costs)
// and last column the rhs. Entering columns are scanned in [0, scan_cols);
// Bland's rule on both choices guarantees termination.
inline void simplex_iterate(std::vector<std::vector<Rational>>& tab, std::vector<int>& basis,
                            int scan_cols, int rhs_col) {
  const int m = static_cast<int>(basis.size());
  for (;;) {
    int enter = -1;
    for (int j = 0; j < scan_cols; ++j) {
      if (tab[m][j] > 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) return;
    int leave = -1;
    Rational best;
    for (int i = 0; i < m; ++i) {
      if (tab[i][enter] > 0) {
        Rational ratio = tab[i][rhs_col] / tab[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
    }
    if (leave < 0) throw invariant_error("LP unbounded; certificate problems are always bounded");
    Rational piv = tab[leave][enter];
    for (int j = 0; j <= rhs_col; ++j) tab[leave][j] /= piv;
    for (int i = 0; i <= m; ++i) {
      if (i == leave) continue;
      Rational f = tab[i][enter];
      if (f == 0) continue;
      for (int j = 0; j <= rhs_col; ++j) tab[i][j] -= f * tab[leave][j];
    }
    basis[leave] = enter;
  }
}

}  // namespace detail

// maximize c.x subject to A x = b, x >= 0.
inline LPResult lp_solve_max(const std::vector<std::vector<Rational>>& A,
                             const std::vector<Rational>& b, const std::vector<Rational>& c) {
  const int m = static_cast<int>(A.size());
  const int n = static_cast<int>(c.size());
  const int rhs = n + m;  // column layout: n structural, m artificial, rhs
  std::vector<std::vector<Rational>> tab(m + 1, std::vector<Rational>(rhs + 1, Rational(0)));
  for (int i = 0; i < m; ++i) {
    bool flip = b[i] < 0;
    for (int j = 0; j < n; ++j) tab[i][j] = flip ? -A[i][j] : A[i][j];
    tab[i][n + i] = 1;
    tab[i][rhs] = flip ? -b[i] : b[i];
  }
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = n + i;

  // Phase 1: maximize -sum(artificials). With the artificial basis, the
  // reduced cost of structural column j is the column sum of A.
  for (int j = 0; j <= rhs; ++j) {
    Rational s = 0;
    for (int i = 0; i < m; ++i) s += tab[i][j];
    tab[m][j] = s;
  }
  for (int i = 0; i < m; ++i) tab[m][n + i] -= 1;
  detail::simplex_iterate(tab, basis, n, rhs);
  if (tab[m][rhs] != 0) return LPResult{};  // infeasible

  // Drive any degenerate artificial out of the basis.
  for (int i = 0; i < m; ++i) {
    if (basis[i] < n) continue;
    int enter = -1;
    for (int j = 0; j < n; ++j) {
      if (tab[i][j] != 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) continue;  // redundant constraint, row is zero on structural part
    Rational piv = tab[i][enter];
    for (int j = 0; j <= rhs; ++j) tab[i][j] /= piv;
    for (int k = 0; k <= m; ++k) {
      if (k == i) continue;
      Rational f = tab[k][enter];
      if (f == 0) continue;
      for (int j = 0; j <= rhs; ++j) tab[k][j] -= f * tab[i][j];
    }
    basis[i] = enter;
  }

  // Phase 2: real objective; artificial columns are never scanned again.
  for (int j = 0; j <= rhs; ++j) tab[m][j] = 0;
  for (int j = 0; j < n; ++j) tab[m][j] = c[j];
  for (int i = 0; i < m; ++i) {
    if (basis[i] < n && tab[m][basis[i]] != 0) {
      Rational f = tab[m][basis[i]];
      for (int j = 0; j <= rhs; ++j) tab[m][j] -= f * tab[i][j];
    }
  }
  detail::simplex_iterate(tab, basis, n, rhs);

  LPResult res;
  res.feasible = true;
  res.solution.assign(n, Rational(0));
  for (int i = 0; i < m; ++i)
    if (basis[i] < n) res.solution[basis[i]] = tab[i][rhs];
  res.objective = 0;
  for (int j = 0; j < n; ++j) res.objective += c[j] * res.solution[j];
  return res;
}

// Is `target` a convex combination of `pts`?
inline bool in_convex_hull(const std::vector<IVec>& pts, const IVec& target) {
  if (pts.empty()) return false;
  const int dim = static_cast<int>(target.size());
  const int n = static_cast<int>(pts.size());
  std::vector<std::vector<Rational>> A(dim + 1, std::vector<Rational>(n));
  std::vector<Rational> b(dim + 1), c(n, Rational(0));
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < n; ++j) A[i][j] = Rational(pts[j][i]);
    b[i] = Rational(target[i]);
  }
  for (int j = 0; j < n; ++j) A[dim][j] = 1;
  b[dim] = 1;
  return lp_solve_max(A, b, c).feasible;
}

// Edge certificate: {pts[vi], pts[vj]} is a 1-face iff the midpoint admits no
// convex representation with positive mass outside {vi, vj}. We maximize the
// outside mass; the pair is an edge iff the optimum is exactly zero.
inline bool edge_certificate(const std::vector<IVec>& pts, int vi, int vj) {
  const int dim = static_cast<int>(pts[vi].size());
  const int n = static_cast<int>(pts.size());
  std::vector<std::vector<Rational>> A(dim + 1, std::vector<Rational>(n));
  std::vector<Rational> b(dim + 1), c(n, Rational(1));
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < n; ++j) A[i][j] = Rational(pts[j][i]);
    b[i] = Rational(pts[vi][i] + pts[vj][i]) / 2;
  }
  for (int j = 0; j < n; ++j) A[dim][j] = 1;
  b[dim] = 1;
  c[vi] = 0;
  c[vj] = 0;
  LPResult res = lp_solve_max(A, b, c);
  if (!res.feasible) throw invariant_error("edge midpoint LP infeasible");
  return res.objective == 0;
}

}  // namespace gkm
