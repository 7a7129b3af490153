#include "twistab/intmat.hpp"

#include <cassert>
#include <stdexcept>

namespace twistab {

IMat imat_identity(int n) {
  IMat m(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IMat imat_mul(const IMat& a, const IMat& b) {
  int n = static_cast<int>(a.size());
  int k = n ? static_cast<int>(a[0].size()) : 0;
  int m = k ? static_cast<int>(b[0].size()) : 0;
  assert(static_cast<int>(b.size()) == k);
  IMat c(n, std::vector<Int>(m, 0));
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (int j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
    }
  return c;
}

std::vector<Int> imat_mul_vec(const IMat& a, const std::vector<Int>& x) {
  std::vector<Int> y(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    assert(a[i].size() == x.size());
    for (size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  }
  return y;
}

IMat imat_inverse_unimodular(const IMat& u) {
  int n = static_cast<int>(u.size());
  // Gauss-Jordan over Q; entries of the result must come out integral.
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = Rat(u[i][j]);
    a[i][n + i] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int r = c; r < n; ++r)
      if (a[r][c] != 0) { p = r; break; }
    if (p < 0) throw std::invalid_argument("matrix not invertible");
    std::swap(a[p], a[c]);
    Rat inv = Rat(1) / a[c][c];
    for (int j = 0; j < 2 * n; ++j) a[c][j] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rat f = a[r][c];
      for (int j = 0; j < 2 * n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  IMat out(n, std::vector<Int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rat& v = a[i][n + j];
      if (denominator(v) != 1)
        throw std::invalid_argument("matrix is not unimodular");
      out[i][j] = numerator(v);
    }
  return out;
}

namespace {

Int iabs(const Int& v) { return v < 0 ? Int(-v) : v; }

struct SnfWork {
  IMat a, u, v;
  int rows, cols;

  void row_swap(int i, int j) {
    std::swap(a[i], a[j]);
    std::swap(u[i], u[j]);
  }
  void row_addmul(int i, int j, const Int& f) {  // row i += f * row j
    for (int c = 0; c < cols; ++c) a[i][c] += f * a[j][c];
    for (int c = 0; c < rows; ++c) u[i][c] += f * u[j][c];
  }
  void row_neg(int i) {
    for (int c = 0; c < cols; ++c) a[i][c] = -a[i][c];
    for (int c = 0; c < rows; ++c) u[i][c] = -u[i][c];
  }
  void col_swap(int i, int j) {
    for (int r = 0; r < cols; ++r) std::swap(v[r][i], v[r][j]);
    for (int r = 0; r < rows; ++r) std::swap(a[r][i], a[r][j]);
  }
  void col_addmul(int i, int j, const Int& f) {  // col i += f * col j
    for (int r = 0; r < rows; ++r) a[r][i] += f * a[r][j];
    for (int r = 0; r < cols; ++r) v[r][i] += f * v[r][j];
  }
};

}  // namespace

std::vector<Int> SnfResult::diagonal() const {
  std::vector<Int> d;
  for (int i = 0; i < std::min(rows, cols); ++i) d.push_back(s[i][i]);
  return d;
}

SnfResult snf(IMat a) {
  int rows = static_cast<int>(a.size());
  int cols = rows ? static_cast<int>(a[0].size()) : 0;
  SnfWork w{std::move(a), imat_identity(rows), imat_identity(cols), rows, cols};

  int t = 0;
  int lim = std::min(rows, cols);
  while (t < lim) {
    // Smallest nonzero pivot in the trailing block keeps entries tame.
    int pi = -1, pj = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j) {
        if (w.a[i][j] == 0) continue;
        if (pi < 0 || iabs(w.a[i][j]) < iabs(w.a[pi][pj])) { pi = i; pj = j; }
      }
    if (pi < 0) break;
    if (pi != t) w.row_swap(pi, t);
    if (pj != t) w.col_swap(pj, t);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (int i = t + 1; i < rows; ++i) {
        if (w.a[i][t] == 0) continue;
        Int q = w.a[i][t] / w.a[t][t];
        w.row_addmul(i, t, -q);
        if (w.a[i][t] != 0) {  // remainder becomes the new, smaller pivot
          w.row_swap(i, t);
          dirty = true;
        }
      }
      for (int j = t + 1; j < cols; ++j) {
        if (w.a[t][j] == 0) continue;
        Int q = w.a[t][j] / w.a[t][t];
        w.col_addmul(j, t, -q);
        if (w.a[t][j] != 0) {
          w.col_swap(j, t);
          dirty = true;
        }
      }
    }

    // Divisibility sweep: pivot must divide the whole trailing block.
    bool redo = false;
    for (int i = t + 1; i < rows && !redo; ++i)
      for (int j = t + 1; j < cols && !redo; ++j)
        if (w.a[i][j] % w.a[t][t] != 0) {
          w.row_addmul(t, i, 1);
          redo = true;
        }
    if (redo) continue;

    if (w.a[t][t] < 0) w.row_neg(t);
    ++t;
  }

  SnfResult r;
  r.s = std::move(w.a);
  r.u = std::move(w.u);
  r.v = std::move(w.v);
  r.rows = rows;
  r.cols = cols;
  r.rank = t;
  return r;
}

std::optional<std::vector<Int>> solve_integer(const SnfResult& f,
                                              const std::vector<Int>& b) {
  assert(static_cast<int>(b.size()) == f.rows);
  std::vector<Int> ub = imat_mul_vec(f.u, b);
  std::vector<Int> y(f.cols, 0);
  for (int i = 0; i < f.rows; ++i) {
    if (i < f.rank) {
      if (ub[i] % f.s[i][i] != 0) return std::nullopt;
      y[i] = ub[i] / f.s[i][i];
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return imat_mul_vec(f.v, y);
}

std::vector<std::vector<Int>> kernel_basis(const SnfResult& f) {
  std::vector<std::vector<Int>> basis;
  for (int j = f.rank; j < f.cols; ++j) {
    std::vector<Int> col(f.cols);
    for (int i = 0; i < f.cols; ++i) col[i] = f.v[i][j];
    basis.push_back(std::move(col));
  }
  return basis;
}

std::vector<Int> cokernel_invariants(const IMat& a) {
  int rows = static_cast<int>(a.size());
  SnfResult f = snf(a);
  if (f.rank < rows)
    throw std::invalid_argument("cokernel is infinite");
  std::vector<Int> out;
  for (int i = 0; i < rows; ++i)
    if (f.s[i][i] > 1) out.push_back(f.s[i][i]);
  return out;
}

}  // namespace twistab
