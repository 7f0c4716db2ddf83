#pragma once

// Independent reference computations for the test suites. Everything here is
// deliberately brute force and shares no code path with the solvers under
// test beyond the Matrix container.

#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "normqr/dense.hpp"
#include "normqr/rng.hpp"
#include "normqr/simplex.hpp"

namespace oracle {

using normqr::Matrix;
using normqr::Vector;

inline Matrix gaussian_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  normqr::Rng rng(seed);
  Matrix m(rows, cols);
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = rng.gaussian();
  return m;
}

// Lexicographic k-subset iteration over {0, ..., total-1}.
inline bool next_combination(std::vector<std::size_t>& idx, std::size_t total) {
  const std::size_t k = idx.size();
  std::size_t i = k;
  while (i-- > 0) {
    if (idx[i] + (k - i) < total) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

inline std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  return idx;
}

// Plain Gaussian elimination with partial pivoting; empty on (near) singular.
inline std::optional<Vector> solve_square(std::vector<Vector> rows, Vector rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::fabs(rows[i][k]) > std::fabs(rows[p][k])) p = i;
    if (std::fabs(rows[p][k]) < 1e-12) return std::nullopt;
    std::swap(rows[p], rows[k]);
    std::swap(rhs[p], rhs[k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = rows[i][k] / rows[k][k];
      if (f == 0.0) continue;
      for (std::size_t j = k; j < n; ++j) rows[i][j] -= f * rows[k][j];
      rhs[i] -= f * rhs[k];
    }
  }
  Vector x(n);
  for (std::size_t kk = n; kk-- > 0;) {
    double s = rhs[kk];
    for (std::size_t j = kk + 1; j < n; ++j) s -= rows[kk][j] * x[j];
    x[kk] = s / rows[kk][kk];
  }
  return x;
}

inline double residual_norm(const Matrix& b, const Vector& bvec, const Vector& c,
                            normqr::NormKind kind) {
  Vector r(bvec);
  for (std::size_t j = 0; j < b.cols(); ++j)
    for (std::size_t i = 0; i < b.rows(); ++i) r[i] -= b(i, j) * c[j];
  return normqr::vector_norm(r, kind);
}

// Brute-force LP optimum by enumerating basic solutions of the combined
// system (constraint rows plus finite bound rows). Assumes the feasible set
// is pointed (every test problem bounds all variables below), so the optimum
// sits on a vertex.
inline std::optional<double> lp_vertex_optimum(const normqr::LpProblem& p) {
  const std::size_t n = p.c.size();
  std::vector<Vector> rows;
  Vector rhs;
  for (std::size_t i = 0; i < p.g.rows(); ++i) {
    Vector row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = p.g(i, j);
    rows.push_back(std::move(row));
    rhs.push_back(p.h[i]);
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (p.var_bounds[j].lower > -std::numeric_limits<double>::infinity()) {
      Vector row(n, 0.0);
      row[j] = -1.0;
      rows.push_back(std::move(row));
      rhs.push_back(-p.var_bounds[j].lower);
    }
    if (p.var_bounds[j].upper < std::numeric_limits<double>::infinity()) {
      Vector row(n, 0.0);
      row[j] = 1.0;
      rows.push_back(std::move(row));
      rhs.push_back(p.var_bounds[j].upper);
    }
  }

  const std::size_t total = rows.size();
  if (total < n) return std::nullopt;
  double best = std::numeric_limits<double>::infinity();
  bool found = false;
  auto idx = first_combination(n);
  do {
    std::vector<Vector> sub(n);
    Vector subrhs(n);
    for (std::size_t i = 0; i < n; ++i) {
      sub[i] = rows[idx[i]];
      subrhs[i] = rhs[idx[i]];
    }
    if (auto x = solve_square(std::move(sub), std::move(subrhs))) {
      bool feasible = true;
      for (std::size_t i = 0; i < total && feasible; ++i) {
        double lhs = 0.0;
        for (std::size_t j = 0; j < n; ++j) lhs += rows[i][j] * (*x)[j];
        feasible = lhs <= rhs[i] + 1e-7 * (1.0 + std::fabs(rhs[i]));
      }
      if (feasible) {
        double obj = 0.0;
        for (std::size_t j = 0; j < n; ++j) obj += p.c[j] * (*x)[j];
        best = std::min(best, obj);
        found = true;
      }
    }
  } while (next_combination(idx, total));
  if (!found) return std::nullopt;
  return best;
}

// l1 regression optimum: some optimal coefficient vector interpolates k rows
// exactly (basis in general position), so minimizing the true objective over
// all interpolating candidates recovers the optimum.
inline double lad_optimum(const Matrix& b, const Vector& bvec) {
  const std::size_t m = b.rows();
  const std::size_t k = b.cols();
  double best = std::numeric_limits<double>::infinity();
  auto idx = first_combination(k);
  do {
    std::vector<Vector> sub(k, Vector(k));
    Vector subrhs(k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) sub[i][j] = b(idx[i], j);
      subrhs[i] = bvec[idx[i]];
    }
    if (auto c = solve_square(std::move(sub), std::move(subrhs)))
      best = std::min(best, residual_norm(b, bvec, *c, normqr::NormKind::L1));
  } while (next_combination(idx, m));
  return best;
}

// l-infinity regression optimum: the optimal vertex has k+1 residuals of
// equal magnitude, so solving B_S c + s z = b_S over all (k+1)-subsets and
// sign patterns and taking the best true objective recovers the optimum.
inline double minimax_optimum(const Matrix& b, const Vector& bvec) {
  const std::size_t m = b.rows();
  const std::size_t k = b.cols();
  const std::size_t p = k + 1;
  double best = std::numeric_limits<double>::infinity();
  if (m < p) return best;
  auto idx = first_combination(p);
  do {
    for (std::size_t signs = 0; signs < (1u << (p - 1)); ++signs) {
      std::vector<Vector> sub(p, Vector(p));
      Vector subrhs(p);
      for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = 0; j < k; ++j) sub[i][j] = b(idx[i], j);
        const double sign = (i == 0 || ((signs >> (i - 1)) & 1u)) ? 1.0 : -1.0;
        sub[i][k] = sign;
        subrhs[i] = bvec[idx[i]];
      }
      if (auto cz = solve_square(std::move(sub), std::move(subrhs))) {
        Vector c(cz->begin(), cz->begin() + static_cast<std::ptrdiff_t>(k));
        best = std::min(best, residual_norm(b, bvec, c, normqr::NormKind::LInf));
      }
    }
  } while (next_combination(idx, m));
  return best;
}

// 1-D grid search for single-column fits.
inline double grid_search_1d(const Matrix& b, const Vector& bvec, normqr::NormKind kind,
                             double lo, double hi, double step) {
  double best = std::numeric_limits<double>::infinity();
  for (double c = lo; c <= hi; c += step)
    best = std::min(best, residual_norm(b, bvec, Vector{c}, kind));
  return best;
}

}  // namespace oracle
