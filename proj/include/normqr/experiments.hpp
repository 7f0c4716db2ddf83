#pragma once

#include <cstdint>
#include <string>

#include "normqr/diagnostics.hpp"

namespace normqr {

// One row of a bounds sweep. kappa_actual is measured in the 2-norm by
// power iteration regardless of the working norm.
struct SweepRecord {
  NormKind norm_kind = NormKind::L1;
  int m = 0;
  double kappa_target = 0.0;
  double kappa_actual = 0.0;
  int trial = 0;
  double forward_norm = 0.0;
  double inverse_norm = 0.0;
  double cond_q = 0.0;
};

struct ExperimentConfig {
  NormKind norm_kind = NormKind::L1;
  std::vector<int> m_list;
  std::vector<double> kappa_list;
  int trials = 1;
  std::uint64_t seed = 0;
  std::string output_path;
};

struct SweepResult {
  std::vector<SweepRecord> records;
  int failures = 0;  // trials recorded as NaN sentinel rows
};

// A = U diag(sigma) V^T with sigma log-spaced from 1 down to 1/kappa and
// U, V the positive-diagonal Householder Q factors of seeded Gaussian
// matrices, so the 2-norm condition number equals kappa by construction
// and the same (m, kappa, seed) always returns the same matrix.
Matrix random_matrix_with_condition(int m, double kappa, std::uint64_t seed);

// Runs the (m, kappa, trial) grid for the configured norm, appends one
// record per trial, and writes the CSV when output_path is nonempty.
// Header: norm,m,kappa_target,kappa_actual,trial,forward_norm,inverse_norm,cond_q
// A trial whose factorization or conditioning fails numerically becomes a
// NaN sentinel row and bumps `failures`.
SweepResult run_bound_sweep(const ExperimentConfig& cfg);

// Vandermonde matrix on m equally spaced points of [-1, 1]:
// x_i = -1 + 2(i-1)/(m-1), V(i, j) = x_i^(j-1).
Matrix vandermonde(int m, int n);

struct BasisExperimentResult {
  Vector x;          // sample grid
  QRFactors factors;
  Vector cheb_corr;  // LInf only: |corr(Q_j, T_{j-1})| for columns j >= 2
};

// Factors the Vandermonde basis under the working norm and writes a CSV of
// the grid and Q columns ("x,q1..qk"); for LInf the absolute Pearson
// correlation of each column j >= 2 against the Chebyshev polynomial of
// degree j-1 is appended as "# cheb_corr_j=<value>" comment lines.
BasisExperimentResult run_basis_experiment(int m, int n, NormKind kind,
                                           const std::string& output_path);

// Degree-n Chebyshev polynomial of the first kind on [-1, 1].
double chebyshev_t(int n, double x);

// Pearson correlation of two equal-length samples.
double pearson_correlation(std::span<const double> u, std::span<const double> v);

}  // namespace normqr
