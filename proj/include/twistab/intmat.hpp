#pragma once

#include <optional>
#include <vector>

#include "twistab/rational.hpp"

namespace twistab {

// Row-major rectangular integer matrix.
using IMat = std::vector<std::vector<Int>>;

IMat imat_identity(int n);
IMat imat_mul(const IMat& a, const IMat& b);
std::vector<Int> imat_mul_vec(const IMat& a, const std::vector<Int>& x);

// Inverse of a square matrix with determinant +-1.
IMat imat_inverse_unimodular(const IMat& u);

// Smith normal form: u * a * v = s with u, v unimodular, s diagonal,
// nonnegative, and s[i][i] | s[i+1][i+1].
struct SnfResult {
  IMat s, u, v;
  int rows = 0, cols = 0;
  int rank = 0;  // number of nonzero diagonal entries
  std::vector<Int> diagonal() const;
};

SnfResult snf(IMat a);

// Solves a*x = b over the integers using a precomputed factorization of a;
// nullopt when no integral solution exists.
std::optional<std::vector<Int>> solve_integer(const SnfResult& f,
                                              const std::vector<Int>& b);

// Basis of the integer kernel {x : a*x = 0}, one basis vector per entry.
std::vector<std::vector<Int>> kernel_basis(const SnfResult& f);

// Invariant factors (> 1) of Z^rows / (column span of a). Throws
// std::invalid_argument when the quotient is infinite.
std::vector<Int> cokernel_invariants(const IMat& a);

}  // namespace twistab
