#pragma once

#include <vector>

#include "twistab/rational.hpp"

namespace twistab {

// maximize c.x subject to A x <= b, x >= 0, in exact rational arithmetic.
struct LinearProgram {
  std::vector<QVec> rows;  // A
  QVec rhs;                // b
  QVec objective;          // c
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  QVec x;
  Rat value;
};

// Two-phase dense simplex with Bland's rule; terminates on all inputs.
LpResult solve_lp(const LinearProgram& lp);

}  // namespace twistab
