#include "normqr/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>

namespace normqr {

const char* lp_status_name(LpStatus status) {
  switch (status) {
    case LpStatus::Optimal:
      return "optimal";
    case LpStatus::Infeasible:
      return "infeasible";
    case LpStatus::Unbounded:
      return "unbounded";
    case LpStatus::IterationLimit:
      return "iteration-limit";
  }
  return "?";
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// How each original variable maps onto the nonnegative standard form.
struct VarMap {
  enum Kind { Shifted, Mirrored, Split } kind;
  std::size_t col;
  std::size_t col2;    // negative part for Split
  double offset;       // l for Shifted, u for Mirrored
};

struct Tableau {
  std::size_t nrows = 0;
  std::size_t ncols = 0;         // structural + slack + artificial
  std::size_t first_artificial = 0;
  std::vector<double> cells;     // nrows x (ncols + 1), rhs in the last column
  Vector cost1, cost2;           // reduced-cost rows; last entry is -objective
  std::vector<std::size_t> basis;

  double* row(std::size_t i) { return cells.data() + i * (ncols + 1); }
  const double* row(std::size_t i) const { return cells.data() + i * (ncols + 1); }
  double rhs(std::size_t i) const { return row(i)[ncols]; }
};

void pivot(Tableau& tb, std::size_t r, std::size_t s) {
  const std::size_t w = tb.ncols + 1;
  double* pr = tb.row(r);
  const double inv = 1.0 / pr[s];
  for (std::size_t j = 0; j < w; ++j) pr[j] *= inv;
  pr[s] = 1.0;
  for (std::size_t i = 0; i < tb.nrows; ++i) {
    if (i == r) continue;
    double* pi = tb.row(i);
    const double f = pi[s];
    if (f == 0.0) continue;
    for (std::size_t j = 0; j < w; ++j) pi[j] -= f * pr[j];
    pi[s] = 0.0;
  }
  auto update_cost = [&](Vector& cost) {
    const double f = cost[s];
    if (f == 0.0) return;
    for (std::size_t j = 0; j < w; ++j) cost[j] -= f * pr[j];
    cost[s] = 0.0;
  };
  update_cost(tb.cost1);
  update_cost(tb.cost2);
  tb.basis[r] = s;
}

enum class PhaseResult { Converged, Unbounded, IterationLimit };

// Runs simplex iterations against one cost row. `limit` excludes artificial
// columns from pricing: they start basic and may only leave, which is valid
// because any feasible point is expressible without them. Pricing starts
// with Dantzig's rule and permanently falls back to Bland's least-index
// rule once the objective has stalled for kStallLimit pivots, which
// prevents cycling on degenerate problems while keeping the pivot sequence
// a pure function of the input. `obj_floor` is a known lower bound on the
// phase objective; reaching it stops the phase, which keeps phase 1 from
// churning on noise-level reduced costs once feasibility is attained.
PhaseResult run_phase(Tableau& tb, Vector& cost, std::size_t limit, double tol, int max_iters,
                      int& iters, bool& bland, double obj_floor) {
  constexpr int kStallLimit = 30;
  int stall = 0;
  double last_obj = -cost[tb.ncols];

  for (;;) {
    if (-cost[tb.ncols] <= obj_floor) return PhaseResult::Converged;
    std::size_t enter = kNone;
    if (bland) {
      for (std::size_t j = 0; j < limit; ++j) {
        if (cost[j] < -tol) {
          enter = j;
          break;
        }
      }
    } else {
      double best = -tol;
      for (std::size_t j = 0; j < limit; ++j) {
        if (cost[j] < best) {
          best = cost[j];
          enter = j;
        }
      }
    }
    if (enter == kNone) return PhaseResult::Converged;
    if (iters >= max_iters) return PhaseResult::IterationLimit;

    std::size_t leave = kNone;
    double best_ratio = kInf;
    std::size_t best_var = kNone;
    for (std::size_t i = 0; i < tb.nrows; ++i) {
      const double a = tb.row(i)[enter];
      if (a <= tol) continue;
      const double rhs = tb.rhs(i);
      const double ratio = rhs > 0.0 ? rhs / a : 0.0;
      if (ratio < best_ratio || (ratio == best_ratio && tb.basis[i] < best_var)) {
        best_ratio = ratio;
        best_var = tb.basis[i];
        leave = i;
      }
    }
    if (leave == kNone) return PhaseResult::Unbounded;

    pivot(tb, leave, enter);
    ++iters;

    if (!bland) {
      const double obj = -cost[tb.ncols];
      if (obj < last_obj - 1e-12 * (1.0 + std::fabs(last_obj))) {
        stall = 0;
      } else if (++stall >= kStallLimit) {
        bland = true;
      }
      last_obj = obj;
    }
  }
}

void validate(const LpProblem& p) {
  const std::size_t n = p.c.size();
  if (n == 0) throw std::invalid_argument("solve_lp: no variables");
  if (p.var_bounds.size() != n) throw std::invalid_argument("solve_lp: bounds/objective size mismatch");
  if (p.g.rows() != p.h.size()) throw std::invalid_argument("solve_lp: constraint rows/rhs mismatch");
  if (p.g.rows() > 0 && p.g.cols() != n)
    throw std::invalid_argument("solve_lp: constraint columns/objective mismatch");
  for (double v : p.c)
    if (!std::isfinite(v)) throw std::invalid_argument("solve_lp: non-finite objective");
  for (double v : p.h)
    if (!std::isfinite(v)) throw std::invalid_argument("solve_lp: non-finite rhs");
  if (!p.g.all_finite()) throw std::invalid_argument("solve_lp: non-finite constraint matrix");
  for (const VarBounds& b : p.var_bounds) {
    if (std::isnan(b.lower) || std::isnan(b.upper) || b.lower > b.upper)
      throw std::invalid_argument("solve_lp: invalid variable bounds");
  }
}

}  // namespace

LpSolution solve_lp(const LpProblem& p, double tol, int max_iters) {
  validate(p);
  const std::size_t nvars = p.c.size();
  const std::size_t nrows_orig = p.g.rows();
  if (max_iters <= 0) max_iters = 50 * static_cast<int>(nvars + nrows_orig);

  // Map variables onto the nonnegative orthant.
  std::vector<VarMap> vmap(nvars);
  std::size_t nstruct = 0;
  std::size_t n_upper_rows = 0;
  for (std::size_t j = 0; j < nvars; ++j) {
    const VarBounds& b = p.var_bounds[j];
    if (b.lower > -kInf) {
      vmap[j] = {VarMap::Shifted, nstruct++, kNone, b.lower};
      if (b.upper < kInf) ++n_upper_rows;
    } else if (b.upper < kInf) {
      vmap[j] = {VarMap::Mirrored, nstruct++, kNone, b.upper};
    } else {
      vmap[j] = {VarMap::Split, nstruct, nstruct + 1, 0.0};
      nstruct += 2;
    }
  }

  const std::size_t nrows = nrows_orig + n_upper_rows;
  // Dense row construction: structural part plus rhs; slack and artificial
  // columns are appended once the row signs are known.
  std::vector<std::vector<double>> rows(nrows, std::vector<double>(nstruct + 1, 0.0));

  for (std::size_t i = 0; i < nrows_orig; ++i) {
    auto& row = rows[i];
    double rhs = p.h[i];
    for (std::size_t j = 0; j < nvars; ++j) {
      const double g = p.g(i, j);
      if (g == 0.0) continue;
      switch (vmap[j].kind) {
        case VarMap::Shifted:
          row[vmap[j].col] += g;
          rhs -= g * vmap[j].offset;
          break;
        case VarMap::Mirrored:
          row[vmap[j].col] -= g;
          rhs -= g * vmap[j].offset;
          break;
        case VarMap::Split:
          row[vmap[j].col] += g;
          row[vmap[j].col2] -= g;
          break;
      }
    }
    row[nstruct] = rhs;
  }
  {
    std::size_t r = nrows_orig;
    for (std::size_t j = 0; j < nvars; ++j) {
      const VarBounds& b = p.var_bounds[j];
      if (vmap[j].kind == VarMap::Shifted && b.upper < kInf) {
        rows[r][vmap[j].col] = 1.0;
        rows[r][nstruct] = b.upper - b.lower;
        ++r;
      }
    }
  }

  // Normalize row signs so every rhs is nonnegative; rows that had to be
  // negated lose their slack as a basis candidate and get an artificial.
  std::vector<bool> negated(nrows, false);
  std::size_t n_art = 0;
  for (std::size_t i = 0; i < nrows; ++i) {
    if (rows[i][nstruct] < 0.0) {
      for (double& v : rows[i]) v = -v;
      negated[i] = true;
      ++n_art;
    }
  }

  Tableau tb;
  tb.nrows = nrows;
  tb.first_artificial = nstruct + nrows;  // one slack per row
  tb.ncols = tb.first_artificial + n_art;
  tb.cells.assign(nrows * (tb.ncols + 1), 0.0);
  tb.basis.assign(nrows, kNone);
  tb.cost1.assign(tb.ncols + 1, 0.0);
  tb.cost2.assign(tb.ncols + 1, 0.0);

  double rhs_scale = 0.0;
  {
    std::size_t art = tb.first_artificial;
    for (std::size_t i = 0; i < nrows; ++i) {
      double* r = tb.row(i);
      for (std::size_t j = 0; j < nstruct; ++j) r[j] = rows[i][j];
      r[nstruct + i] = negated[i] ? -1.0 : 1.0;  // slack
      r[tb.ncols] = rows[i][nstruct];
      rhs_scale = std::max(rhs_scale, r[tb.ncols]);
      if (negated[i]) {
        r[art] = 1.0;
        tb.basis[i] = art++;
      } else {
        tb.basis[i] = nstruct + i;
      }
    }
  }

  // Phase-2 cost row: objective expressed in the shifted variables. The
  // initial basis (slacks and artificials) carries zero phase-2 cost, so the
  // raw coefficients are already reduced.
  for (std::size_t j = 0; j < nvars; ++j) {
    const double c = p.c[j];
    if (c == 0.0) continue;
    switch (vmap[j].kind) {
      case VarMap::Shifted:
        tb.cost2[vmap[j].col] += c;
        break;
      case VarMap::Mirrored:
        tb.cost2[vmap[j].col] -= c;
        break;
      case VarMap::Split:
        tb.cost2[vmap[j].col] += c;
        tb.cost2[vmap[j].col2] -= c;
        break;
    }
  }

  // Phase-1 cost row: unit cost on artificials, reduced against the rows in
  // which they start basic.
  for (std::size_t j = tb.first_artificial; j < tb.ncols; ++j) tb.cost1[j] = 1.0;
  for (std::size_t i = 0; i < nrows; ++i) {
    if (tb.basis[i] >= tb.first_artificial) {
      const double* r = tb.row(i);
      for (std::size_t j = 0; j <= tb.ncols; ++j) tb.cost1[j] -= r[j];
    }
  }

  LpSolution sol;
  sol.iterations = 0;
  bool bland = false;

  auto recover = [&](LpStatus status) {
    Vector y(tb.ncols, 0.0);
    for (std::size_t i = 0; i < nrows; ++i) y[tb.basis[i]] = std::max(tb.rhs(i), 0.0);
    sol.x.assign(nvars, 0.0);
    for (std::size_t j = 0; j < nvars; ++j) {
      switch (vmap[j].kind) {
        case VarMap::Shifted:
          sol.x[j] = vmap[j].offset + y[vmap[j].col];
          break;
        case VarMap::Mirrored:
          sol.x[j] = vmap[j].offset - y[vmap[j].col];
          break;
        case VarMap::Split:
          sol.x[j] = y[vmap[j].col] - y[vmap[j].col2];
          break;
      }
    }
    double obj = 0.0;
    for (std::size_t j = 0; j < nvars; ++j) obj += p.c[j] * sol.x[j];
    sol.objective = obj;
    sol.status = status;
    return sol;
  };

  if (n_art > 0) {
    const PhaseResult r1 = run_phase(tb, tb.cost1, tb.first_artificial, tol, max_iters,
                                     sol.iterations, bland, 0.0);
    if (r1 == PhaseResult::IterationLimit) return recover(LpStatus::IterationLimit);
    // Phase 1 minimizes a sum of nonnegative variables, so it cannot truly
    // be unbounded; whatever run_phase reported, feasibility is decided by
    // the attained phase-1 objective alone.
    const double infeas = -tb.cost1[tb.ncols];
    if (infeas > tol * (1.0 + rhs_scale)) {
      sol.x.assign(nvars, 0.0);
      sol.objective = std::numeric_limits<double>::quiet_NaN();
      sol.status = LpStatus::Infeasible;
      return sol;
    }
    // Drive leftover artificials out of the basis. A row with no usable
    // structural pivot is redundant; its artificial stays basic at zero and
    // can never change value again.
    for (std::size_t i = 0; i < nrows; ++i) {
      if (tb.basis[i] < tb.first_artificial) continue;
      const double* r = tb.row(i);
      for (std::size_t j = 0; j < tb.first_artificial; ++j) {
        if (std::fabs(r[j]) > tol) {
          pivot(tb, i, j);
          ++sol.iterations;
          break;
        }
      }
    }
  }

  const PhaseResult r2 =
      run_phase(tb, tb.cost2, tb.first_artificial, tol, max_iters, sol.iterations, bland,
                -std::numeric_limits<double>::infinity());
  if (r2 == PhaseResult::IterationLimit) return recover(LpStatus::IterationLimit);
  if (r2 == PhaseResult::Unbounded) {
    sol.x.assign(nvars, 0.0);
    sol.objective = -kInf;
    sol.status = LpStatus::Unbounded;
    return sol;
  }
  return recover(LpStatus::Optimal);
}

}  // namespace normqr
