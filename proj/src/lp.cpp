#include "twistab/lp.hpp"

#include <cassert>

namespace twistab {

namespace {

enum class Step { Improved, Optimal, Unbounded };

// Tableau with rows 0..m-1 the constraints and row m the reduced-cost row.
// Column layout: structural vars, slacks, artificials, rhs last.
struct Tableau {
  int m = 0, rhs_col = 0;
  std::vector<QVec> t;
  std::vector<int> basis;

  Rat& at(int i, int j) { return t[i][j]; }

  void pivot(int row, int col) {
    Rat p = t[row][col];
    for (auto& v : t[row]) v /= p;
    for (int i = 0; i <= m; ++i) {
      if (i == row || t[i][col] == 0) continue;
      Rat f = t[i][col];
      for (int j = 0; j <= rhs_col; ++j) t[i][j] -= f * t[row][j];
    }
    basis[row] = col;
  }

  // Bland's rule: entering = lowest-index column with positive reduced cost;
  // leaving = min ratio, ties broken by lowest basic index. Never cycles.
  Step step(int usable_cols) {
    int col = -1;
    for (int j = 0; j < usable_cols; ++j)
      if (t[m][j] > 0) { col = j; break; }
    if (col < 0) return Step::Optimal;
    int row = -1;
    Rat best;
    for (int i = 0; i < m; ++i) {
      if (t[i][col] <= 0) continue;
      Rat ratio = t[i][rhs_col] / t[i][col];
      if (row < 0 || ratio < best || (ratio == best && basis[i] < basis[row])) {
        row = i;
        best = ratio;
      }
    }
    if (row < 0) return Step::Unbounded;
    pivot(row, col);
    return Step::Improved;
  }
};

}  // namespace

LpResult solve_lp(const LinearProgram& lp) {
  int m = static_cast<int>(lp.rows.size());
  int n = static_cast<int>(lp.objective.size());
  for (const auto& r : lp.rows) assert(static_cast<int>(r.size()) == n);
  assert(static_cast<int>(lp.rhs.size()) == m);

  // Rows with negative rhs are negated and get an artificial variable.
  std::vector<int> art_of_row(m, -1);
  int n_art = 0;
  for (int i = 0; i < m; ++i)
    if (lp.rhs[i] < 0) art_of_row[i] = n_art++;
  int cols = n + m + n_art;

  Tableau tb;
  tb.m = m;
  tb.rhs_col = cols;
  tb.t.assign(m + 1, QVec(cols + 1, Rat(0)));
  tb.basis.assign(m, -1);

  for (int i = 0; i < m; ++i) {
    Rat sign = lp.rhs[i] < 0 ? Rat(-1) : Rat(1);
    for (int j = 0; j < n; ++j) tb.at(i, j) = sign * lp.rows[i][j];
    tb.at(i, n + i) = sign;  // slack
    if (art_of_row[i] >= 0) {
      tb.at(i, n + m + art_of_row[i]) = 1;
      tb.basis[i] = n + m + art_of_row[i];
    } else {
      tb.basis[i] = n + i;
    }
    tb.at(i, cols) = sign * lp.rhs[i];
  }

  LpResult out;
  if (n_art > 0) {
    // Phase 1: maximize -(sum of artificials). Reduced costs for the
    // initial basis put sum-of-artificial-rows in every non-artificial
    // column and zero in the artificial ones.
    for (int j = 0; j <= cols; ++j) {
      bool is_art = j >= n + m && j < cols;
      if (is_art) { tb.at(m, j) = 0; continue; }
      Rat acc = 0;
      for (int i = 0; i < m; ++i)
        if (art_of_row[i] >= 0) acc += tb.at(i, j);
      tb.at(m, j) = acc;
    }
    Step s;
    while ((s = tb.step(cols)) == Step::Improved) {}
    assert(s == Step::Optimal);  // phase 1 is bounded above by 0
    if (tb.at(m, cols) != 0) {
      out.status = LpStatus::Infeasible;
      return out;
    }
    // Drive any artificial still in the basis out of it; an all-zero row is
    // a redundant constraint and can stay.
    for (int i = 0; i < m; ++i) {
      if (tb.basis[i] < n + m) continue;
      for (int j = 0; j < n + m; ++j)
        if (tb.at(i, j) != 0) { tb.pivot(i, j); break; }
    }
  }

  // Phase 2 objective, priced out against the current basis.
  for (int j = 0; j <= cols; ++j) tb.at(m, j) = 0;
  for (int j = 0; j < n; ++j) tb.at(m, j) = lp.objective[j];
  for (int i = 0; i < m; ++i) {
    if (tb.basis[i] >= n) continue;
    Rat f = lp.objective[tb.basis[i]];
    if (f == 0) continue;
    for (int j = 0; j <= cols; ++j) tb.at(m, j) -= f * tb.t[i][j];
  }
  Step s;
  while ((s = tb.step(n + m)) == Step::Improved) {}  // artificials stay out
  if (s == Step::Unbounded) {
    out.status = LpStatus::Unbounded;
    return out;
  }

  out.status = LpStatus::Optimal;
  out.x.assign(n, Rat(0));
  for (int i = 0; i < m; ++i)
    if (tb.basis[i] < n) out.x[tb.basis[i]] = tb.at(i, cols);
  out.value = 0;
  for (int j = 0; j < n; ++j) out.value += lp.objective[j] * out.x[j];
  return out;
}

}  // namespace twistab
