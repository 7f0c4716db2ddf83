#pragma once

#include "normqr/dense.hpp"

namespace normqr {

// Outcome of argmin_c || b - B c || in some working norm.
struct MinResidualResult {
  Vector c;         // coefficients, length = B.cols()
  double gamma;     // optimal residual norm
  Vector residual;  // b - B c
};

// l1 fit via the LP with variables (t, c), constraints B c - t <= b and
// -B c - t <= -b, t >= 0, objective sum(t). A non-optimal LP status is a
// solver defect for this always-feasible problem and is surfaced as
// std::runtime_error.
MinResidualResult min_l1_residual(const Matrix& basis, std::span<const double> b);

// l-infinity fit via the LP with variables (c, z), constraints
// B c - z 1 <= b and -B c - z 1 <= -b, z >= 0, objective z.
MinResidualResult min_linf_residual(const Matrix& basis, std::span<const double> b);

// l2 fit through the reference Householder QR; requires full column rank.
MinResidualResult min_l2_residual(const Matrix& basis, std::span<const double> b);

// Dispatch on the working norm.
MinResidualResult min_residual(const Matrix& basis, std::span<const double> b, NormKind kind);

}  // namespace normqr
