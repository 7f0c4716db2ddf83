#include "normqr/genqr.hpp"

#include <cmath>
#include <utility>

#include "normqr/minnorm.hpp"

namespace normqr {

QRFactors gen_qr(const Matrix& a, NormKind kind, double breakdown_tol) {
  if (a.rows() == 0 || a.cols() == 0) throw std::invalid_argument("gen_qr: empty matrix");
  if (!a.all_finite()) throw std::invalid_argument("gen_qr: non-finite input");
  if (!(breakdown_tol >= 0.0)) throw std::invalid_argument("gen_qr: negative breakdown tolerance");

  const std::size_t m = a.rows();
  const std::size_t n = a.cols();

  struct ColumnRecord {
    Vector coeffs;
    double gamma = 0.0;
    bool kept = false;
  };
  std::vector<ColumnRecord> records(n);

  QRFactors f;
  f.norm_kind = kind;
  f.q = Matrix(m, 0);

  Vector unit(m);
  for (std::size_t j = 0; j < n; ++j) {
    const Vector col = a.column_copy(j);
    const double col_norm = vector_norm(col, kind);
    const std::size_t k = f.q.cols();

    ColumnRecord rec;
    Vector residual;
    if (k == 0) {
      residual = col;
      rec.gamma = col_norm;
    } else {
      MinResidualResult fit = min_residual(f.q, col, kind);
      rec.coeffs = std::move(fit.c);
      residual = std::move(fit.residual);
      rec.gamma = fit.gamma;
    }

    // Once Q spans R^m every remaining fit is exact in exact arithmetic, so
    // the column count is capped structurally rather than by the tolerance.
    rec.kept = k < m && rec.gamma > breakdown_tol * col_norm;
    if (rec.kept) {
      for (std::size_t i = 0; i < m; ++i) unit[i] = residual[i] / rec.gamma;
      f.q.append_column(unit);
      f.kept.push_back(j);
      f.gammas.push_back(rec.gamma);
    }
    records[j] = std::move(rec);
  }

  if (f.kept.empty()) throw FactorizationError("gen_qr: every column of the input is zero");

  f.r = Matrix(f.q.cols(), n);
  for (std::size_t j = 0; j < n; ++j) {
    const ColumnRecord& rec = records[j];
    for (std::size_t i = 0; i < rec.coeffs.size(); ++i) f.r(i, j) = rec.coeffs[i];
    if (rec.kept) f.r(rec.coeffs.size(), j) = rec.gamma;
  }
  return f;
}

Matrix reconstruct(const QRFactors& f) { return f.q * f.r; }

QRFactors factor_rectangular(const Matrix& a, NormKind kind) { return gen_qr(a, kind); }

}  // namespace normqr
