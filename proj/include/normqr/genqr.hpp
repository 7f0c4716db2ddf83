#pragma once

#include "normqr/dense.hpp"

namespace normqr {

// Raised when a factorization cannot produce a single column (the input is
// entirely zero).
class FactorizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Output of the norm-generalized QR factorization A = Q R.
//
// Q is m x k with unit columns in the working norm; R is k x n. `kept`
// lists the columns of A that produced a Q column, in order, so R
// restricted to those columns is upper triangular with the gammas on the
// diagonal. A skipped (dependent) column stores only its fitted
// coefficients in R; the rows below them stay zero, which is the thin form
// of the "zero on the diagonal" breakdown convention.
struct QRFactors {
  Matrix q;
  Matrix r;
  std::vector<std::size_t> kept;
  Vector gammas;
  NormKind norm_kind = NormKind::L2;
};

// Column-by-column factorization. Column j is fitted against the Q columns
// accumulated so far by the working-norm minimum-residual subproblem; the
// residual norm gamma becomes the new diagonal entry and the normalized
// residual the new Q column, unless gamma <= breakdown_tol * ||A_j|| in
// which case the column is recorded as skipped. The tolerance is relative,
// so scaling A cannot change which columns survive. A zero column is always
// a breakdown, even in first position.
QRFactors gen_qr(const Matrix& a, NormKind kind, double breakdown_tol = 1e-10);

// Q * R, including the skipped-column bookkeeping.
Matrix reconstruct(const QRFactors& f);

// Factorization of an arbitrary-shape input: tall matrices produce the thin
// Q (k <= n), wide matrices keep at most m columns with the rest expressed
// through R. Identical to gen_qr with the default tolerance; the zero-padded
// square reduction produces the same factors.
QRFactors factor_rectangular(const Matrix& a, NormKind kind);

}  // namespace normqr
