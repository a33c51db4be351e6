#include "qi/common.hpp"

namespace qi {

RatVec solve_int(const IntMat& M, const RatVec& rhs) {
  size_t n = M.size();
  std::vector<RatVec> a(n, RatVec(n + 1));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) a[i][j] = Rat(M[i][j]);
    a[i][n] = rhs[i];
  }
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) throw std::domain_error("solve_int: singular matrix");
    std::swap(a[piv], a[col]);
    Rat p = a[col][col];
    for (size_t j = col; j <= n; ++j) a[col][j] /= p;
    for (size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col].is_zero()) continue;
      Rat f = a[i][col];
      for (size_t j = col; j <= n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  RatVec x(n);
  for (size_t i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

i64 det_int(const IntMat& M) {
  size_t n = M.size();
  std::vector<RatVec> a(n, RatVec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) a[i][j] = Rat(M[i][j]);
  Rat det(1);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) return 0;
    if (piv != col) { std::swap(a[piv], a[col]); det = -det; }
    det *= a[col][col];
    Rat p = a[col][col];
    for (size_t j = col; j < n; ++j) a[col][j] /= p;
    for (size_t i = col + 1; i < n; ++i) {
      if (a[i][col].is_zero()) continue;
      Rat f = a[i][col];
      for (size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  if (!det.is_int()) throw std::logic_error("det_int: non-integer determinant");
  return det.num;
}

std::vector<RatVec> inverse_int(const IntMat& M) {
  size_t n = M.size();
  std::vector<RatVec> inv(n, RatVec(n, Rat(0)));
  for (size_t k = 0; k < n; ++k) {
    RatVec e(n, Rat(0));
    e[k] = Rat(1);
    RatVec col = solve_int(M, e);
    for (size_t i = 0; i < n; ++i) inv[i][k] = col[i];
  }
  return inv;
}

IntMat hnf_row_basis(IntMat gens, int ncols) {
  // Row-reduction HNF by column; standard integer row echelon via gcd steps.
  IntMat rows = std::move(gens);
  IntMat basis;
  int pivot_col = 0;
  size_t start = 0;
  while (pivot_col < ncols) {
    // find a row with a nonzero entry in pivot_col at or after `start`
    size_t sel = std::string::npos;
    for (size_t i = start; i < rows.size(); ++i)
      if (rows[i][pivot_col] != 0) { sel = i; break; }
    if (sel == std::string::npos) { ++pivot_col; continue; }
    std::swap(rows[start], rows[sel]);
    // eliminate entries below via gcd steps
    for (size_t i = start + 1; i < rows.size(); ++i) {
      while (rows[i][pivot_col] != 0) {
        i64 a = rows[start][pivot_col], b = rows[i][pivot_col];
        i64 qd = b / a;
        for (int j = 0; j < ncols; ++j) rows[i][j] -= qd * rows[start][j];
        if (rows[i][pivot_col] != 0) std::swap(rows[start], rows[i]);
      }
    }
    if (rows[start][pivot_col] < 0)
      for (int j = 0; j < ncols; ++j) rows[start][j] = -rows[start][j];
    ++start;
    ++pivot_col;
  }
  rows.resize(start);
  // reduce above-pivot entries
  for (size_t i = rows.size(); i-- > 0;) {
    int pc = 0;
    while (pc < ncols && rows[i][pc] == 0) ++pc;
    if (pc == ncols) continue;
    for (size_t k = 0; k < i; ++k) {
      i64 v = rows[k][pc];
      i64 qd = (v % rows[i][pc] + rows[i][pc]) % rows[i][pc];
      i64 mult = (v - qd) / rows[i][pc];
      if (mult != 0)
        for (int j = 0; j < ncols; ++j) rows[k][j] -= mult * rows[i][j];
    }
  }
  return rows;
}

RatVec reduce_mod_lattice(RatVec v, const IntMat& hnf) {
  // hnf is upper triangular full rank (n x n) with pivots on the diagonal.
  // Process pivot columns left to right; rows below never touch columns
  // already normalized, so each coordinate lands canonically in [0, pivot).
  int n = int(v.size());
  for (int i = 0; i < n; ++i) {
    Rat coord = v[i] / Rat(hnf[i][i]);
    i64 fl = coord.num >= 0 ? coord.num / coord.den
                            : -((-coord.num + coord.den - 1) / coord.den);
    if (fl != 0)
      for (int j = i; j < n; ++j) v[j] -= Rat(fl) * Rat(hnf[i][j]);
  }
  return v;
}

}  // namespace qi
