#pragma once

#include <limits>

#include "normqr/dense.hpp"

namespace normqr {

// One variable's box; infinities mark a missing bound.
struct VarBounds {
  double lower = -std::numeric_limits<double>::infinity();
  double upper = std::numeric_limits<double>::infinity();
};

inline VarBounds nonnegative() { return {0.0, std::numeric_limits<double>::infinity()}; }
inline VarBounds free_var() { return {}; }

// minimize c.x  subject to  g x <= h  and per-variable bounds.
struct LpProblem {
  Vector c;
  Matrix g;
  Vector h;
  std::vector<VarBounds> var_bounds;
};

enum class LpStatus { Optimal, Infeasible, Unbounded, IterationLimit };

const char* lp_status_name(LpStatus status);

struct LpSolution {
  Vector x;
  double objective = std::numeric_limits<double>::quiet_NaN();
  LpStatus status = LpStatus::IterationLimit;
  int iterations = 0;
};

// Deterministic dense two-phase simplex. Variables with a finite bound are
// shifted (or mirrored) onto [0, inf); genuinely free variables are split
// into positive and negative parts. Pricing is Dantzig's rule with a
// permanent switch to Bland's least-index rule once the objective stalls,
// so degenerate problems cannot cycle; ratio-test ties always break on the
// smallest basis index. Identical inputs produce bitwise-identical output.
//
// max_iters <= 0 selects the default 50 * (variables + constraints).
LpSolution solve_lp(const LpProblem& p, double tol = 1e-10, int max_iters = 0);

}  // namespace normqr
