#include "normqr/minnorm.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "normqr/simplex.hpp"

namespace normqr {

namespace {

void check_shapes(const Matrix& basis, std::span<const double> b) {
  if (b.empty()) throw std::invalid_argument("min residual: empty right-hand side");
  if (basis.cols() > 0 && basis.rows() != b.size())
    throw std::invalid_argument("min residual: basis/rhs row mismatch");
}

MinResidualResult finish(const Matrix& basis, std::span<const double> b, Vector c,
                         NormKind kind) {
  MinResidualResult out;
  out.residual.assign(b.begin(), b.end());
  if (basis.cols() > 0) {
    const Vector fit = basis * std::span<const double>(c);
    for (std::size_t i = 0; i < out.residual.size(); ++i) out.residual[i] -= fit[i];
  }
  out.gamma = vector_norm(out.residual, kind);
  out.c = std::move(c);
  return out;
}

[[noreturn]] void solver_failure(const char* which, LpStatus status) {
  throw std::runtime_error(std::string(which) +
                           ": internal LP solver failure (status " + lp_status_name(status) +
                           ") on a feasible minimum-residual problem");
}

}  // namespace

MinResidualResult min_l1_residual(const Matrix& basis, std::span<const double> b) {
  check_shapes(basis, b);
  const std::size_t m = b.size();
  const std::size_t k = basis.cols();
  if (k == 0) return finish(basis, b, {}, NormKind::L1);

  // Variables: t (m, nonnegative) then c (k, free).
  LpProblem p;
  p.c.assign(m + k, 0.0);
  for (std::size_t i = 0; i < m; ++i) p.c[i] = 1.0;
  p.g = Matrix(2 * m, m + k);
  p.h.assign(2 * m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    p.g(i, i) = -1.0;
    p.g(m + i, i) = -1.0;
    for (std::size_t j = 0; j < k; ++j) {
      const double v = basis(i, j);
      p.g(i, m + j) = v;
      p.g(m + i, m + j) = -v;
    }
    p.h[i] = b[i];
    p.h[m + i] = -b[i];
  }
  p.var_bounds.assign(m, nonnegative());
  p.var_bounds.resize(m + k, free_var());

  const LpSolution sol = solve_lp(p);
  if (sol.status != LpStatus::Optimal) solver_failure("min_l1_residual", sol.status);
  Vector c(sol.x.begin() + static_cast<std::ptrdiff_t>(m), sol.x.end());
  return finish(basis, b, std::move(c), NormKind::L1);
}

MinResidualResult min_linf_residual(const Matrix& basis, std::span<const double> b) {
  check_shapes(basis, b);
  const std::size_t m = b.size();
  const std::size_t k = basis.cols();
  if (k == 0) return finish(basis, b, {}, NormKind::LInf);

  // Variables: c (k, free) then z (nonnegative bound on the residual).
  LpProblem p;
  p.c.assign(k + 1, 0.0);
  p.c[k] = 1.0;
  p.g = Matrix(2 * m, k + 1);
  p.h.assign(2 * m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const double v = basis(i, j);
      p.g(i, j) = v;
      p.g(m + i, j) = -v;
    }
    p.g(i, k) = -1.0;
    p.g(m + i, k) = -1.0;
    p.h[i] = b[i];
    p.h[m + i] = -b[i];
  }
  p.var_bounds.assign(k, free_var());
  p.var_bounds.push_back(nonnegative());

  const LpSolution sol = solve_lp(p);
  if (sol.status != LpStatus::Optimal) solver_failure("min_linf_residual", sol.status);
  Vector c(sol.x.begin(), sol.x.begin() + static_cast<std::ptrdiff_t>(k));
  return finish(basis, b, std::move(c), NormKind::LInf);
}

MinResidualResult min_l2_residual(const Matrix& basis, std::span<const double> b) {
  check_shapes(basis, b);
  const std::size_t k = basis.cols();
  if (k == 0) return finish(basis, b, {}, NormKind::L2);

  const HouseholderQR qr = reference_householder_qr(basis);
  // c = R^{-1} Q^T b by back substitution.
  Vector qtb(k, 0.0);
  for (std::size_t j = 0; j < k; ++j) {
    auto col = qr.q.column(j);
    double s = 0.0;
    for (std::size_t i = 0; i < b.size(); ++i) s += col[i] * b[i];
    qtb[j] = s;
  }
  Vector c(k, 0.0);
  for (std::size_t jj = k; jj-- > 0;) {
    double s = qtb[jj];
    for (std::size_t j = jj + 1; j < k; ++j) s -= qr.r(jj, j) * c[j];
    c[jj] = s / qr.r(jj, jj);
  }
  return finish(basis, b, std::move(c), NormKind::L2);
}

MinResidualResult min_residual(const Matrix& basis, std::span<const double> b, NormKind kind) {
  switch (kind) {
    case NormKind::L1:
      return min_l1_residual(basis, b);
    case NormKind::L2:
      return min_l2_residual(basis, b);
    case NormKind::LInf:
      return min_linf_residual(basis, b);
  }
  throw std::invalid_argument("min_residual: bad norm kind");
}

}  // namespace normqr
