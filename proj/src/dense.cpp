#include "normqr/dense.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "normqr/rng.hpp"

namespace normqr {

const char* norm_name(NormKind kind) {
  switch (kind) {
    case NormKind::L1:
      return "l1";
    case NormKind::L2:
      return "l2";
    case NormKind::LInf:
      return "linf";
  }
  return "?";
}

NormKind parse_norm_name(const std::string& name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "l1") return NormKind::L1;
  if (lower == "l2") return NormKind::L2;
  if (lower == "linf" || lower == "loo" || lower == "linfty") return NormKind::LInf;
  throw std::invalid_argument("unknown norm \"" + name + "\" (expected l1, l2 or linf)");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  const std::size_t nrows = rows.size();
  const std::size_t ncols = nrows == 0 ? 0 : rows.begin()->size();
  Matrix m(nrows, ncols);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != ncols) throw std::invalid_argument("from_rows: ragged rows");
    std::size_t j = 0;
    for (double v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

Vector Matrix::column_copy(std::size_t j) const {
  auto c = column(j);
  return Vector(c.begin(), c.end());
}

void Matrix::append_column(std::span<const double> col) {
  if (rows_ == 0) rows_ = col.size();
  if (col.size() != rows_) throw std::invalid_argument("append_column: length mismatch");
  data_.insert(data_.end(), col.begin(), col.end());
  ++cols_;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t j = 0; j < cols_; ++j)
    for (std::size_t i = 0; i < rows_; ++i) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](double v) { return std::isfinite(v); });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: inner dimension mismatch");
  Matrix c(a.rows(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double bkj = b(k, j);
      if (bkj == 0.0) continue;
      for (std::size_t i = 0; i < a.rows(); ++i) c(i, j) += a(i, k) * bkj;
    }
  }
  return c;
}

Vector operator*(const Matrix& a, std::span<const double> x) {
  if (a.cols() != x.size()) throw std::invalid_argument("matvec: dimension mismatch");
  Vector y(a.rows(), 0.0);
  for (std::size_t j = 0; j < a.cols(); ++j) {
    const double xj = x[j];
    if (xj == 0.0) continue;
    auto col = a.column(j);
    for (std::size_t i = 0; i < a.rows(); ++i) y[i] += col[i] * xj;
  }
  return y;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix subtraction: shape mismatch");
  Matrix c(a.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i) c(i, j) = a(i, j) - b(i, j);
  return c;
}

double max_abs(const Matrix& m) {
  double best = 0.0;
  for (double v : m.data()) best = std::max(best, std::fabs(v));
  return best;
}

double vector_norm(std::span<const double> x, NormKind kind) {
  if (x.empty()) throw std::invalid_argument("vector_norm: empty vector");
  for (double v : x)
    if (!std::isfinite(v)) throw std::invalid_argument("vector_norm: non-finite entry");
  switch (kind) {
    case NormKind::L1: {
      double s = 0.0;
      for (double v : x) s += std::fabs(v);
      return s;
    }
    case NormKind::L2: {
      double s = 0.0;
      for (double v : x) s += v * v;
      return std::sqrt(s);
    }
    case NormKind::LInf: {
      double s = 0.0;
      for (double v : x) s = std::max(s, std::fabs(v));
      return s;
    }
  }
  return 0.0;
}

namespace {

// Top singular value by power iteration on M^T M with a Rayleigh quotient
// estimate. Relative tolerance 1e-10, iteration cap 10*max(m, n); on a cap
// hit the current estimate is returned.
double spectral_norm(const Matrix& m) {
  const std::size_t nr = m.rows();
  const std::size_t nc = m.cols();
  const std::size_t cap = 10 * std::max(nr, nc);
  const double tol = 1e-10;

  Rng rng(0x5D31F2A6C0FFEE01ULL);
  Vector x(nc);
  for (double& v : x) v = rng.gaussian();
  double xnorm = vector_norm(x, NormKind::L2);
  for (double& v : x) v /= xnorm;

  double lambda = 0.0;
  for (std::size_t it = 0; it < cap; ++it) {
    // z = M^T (M x)
    Vector mx = m * std::span<const double>(x);
    Vector z(nc, 0.0);
    for (std::size_t j = 0; j < nc; ++j) {
      auto col = m.column(j);
      double s = 0.0;
      for (std::size_t i = 0; i < nr; ++i) s += col[i] * mx[i];
      z[j] = s;
    }
    double rayleigh = 0.0;
    for (std::size_t j = 0; j < nc; ++j) rayleigh += x[j] * z[j];
    double znorm = 0.0;
    for (double v : z) znorm += v * v;
    znorm = std::sqrt(znorm);
    if (znorm == 0.0) return 0.0;  // x landed in the null space => M x = 0
    for (std::size_t j = 0; j < nc; ++j) x[j] = z[j] / znorm;
    if (it > 0 && std::fabs(rayleigh - lambda) <= tol * std::fabs(rayleigh)) {
      lambda = rayleigh;
      break;
    }
    lambda = rayleigh;
  }
  return std::sqrt(std::max(lambda, 0.0));
}

}  // namespace

double induced_matrix_norm(const Matrix& m, NormKind kind) {
  if (m.empty()) throw std::invalid_argument("induced_matrix_norm: empty matrix");
  if (!m.all_finite()) throw std::invalid_argument("induced_matrix_norm: non-finite entry");
  switch (kind) {
    case NormKind::L1: {
      double best = 0.0;
      for (std::size_t j = 0; j < m.cols(); ++j) {
        double s = 0.0;
        for (double v : m.column(j)) s += std::fabs(v);
        best = std::max(best, s);
      }
      return best;
    }
    case NormKind::LInf: {
      Vector rowsum(m.rows(), 0.0);
      for (std::size_t j = 0; j < m.cols(); ++j) {
        auto col = m.column(j);
        for (std::size_t i = 0; i < m.rows(); ++i) rowsum[i] += std::fabs(col[i]);
      }
      return *std::max_element(rowsum.begin(), rowsum.end());
    }
    case NormKind::L2:
      return spectral_norm(m);
  }
  return 0.0;
}

Matrix lu_invert(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("lu_invert: matrix not square");
  if (!m.all_finite()) throw std::invalid_argument("lu_invert: non-finite entry");
  const std::size_t n = m.rows();
  const double pivot_floor = 1e-12 * induced_matrix_norm(m, NormKind::LInf);

  // In-place factorization of a working copy, pivot rows tracked in perm.
  Matrix lu = m;
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = std::fabs(lu(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double v = std::fabs(lu(i, k));
      if (v > best) {
        best = v;
        p = i;
      }
    }
    if (best <= pivot_floor) {
      std::ostringstream msg;
      msg << "lu_invert: singular to tolerance at pivot " << k << " (|pivot| = " << best << ")";
      throw SingularMatrixError(k, msg.str());
    }
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(p, j));
      std::swap(perm[k], perm[p]);
    }
    const double inv_piv = 1.0 / lu(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = lu(i, k) * inv_piv;
      lu(i, k) = f;
      if (f == 0.0) continue;
      for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= f * lu(k, j);
    }
  }

  // Solve LU x = P e_j for each unit vector.
  Matrix inv(n, n);
  Vector work(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) work[i] = perm[i] == j ? 1.0 : 0.0;
    for (std::size_t i = 1; i < n; ++i) {
      double s = work[i];
      for (std::size_t k = 0; k < i; ++k) s -= lu(i, k) * work[k];
      work[i] = s;
    }
    for (std::size_t ii = n; ii-- > 0;) {
      double s = work[ii];
      for (std::size_t k = ii + 1; k < n; ++k) s -= lu(ii, k) * work[k];
      work[ii] = s / lu(ii, ii);
    }
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = work[i];
  }
  return inv;
}

double condition_number(const Matrix& m, NormKind kind) {
  return induced_matrix_norm(m, kind) * induced_matrix_norm(lu_invert(m), kind);
}

HouseholderQR reference_householder_qr(const Matrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (m < n) throw std::invalid_argument("reference_householder_qr: requires m >= n");
  const double rank_floor = 1e-12 * std::max(max_abs(a), 1e-300);

  Matrix work = a;
  std::vector<Vector> reflectors;
  reflectors.reserve(n);

  for (std::size_t k = 0; k < n; ++k) {
    double norm_x = 0.0;
    for (std::size_t i = k; i < m; ++i) norm_x += work(i, k) * work(i, k);
    norm_x = std::sqrt(norm_x);
    if (norm_x <= rank_floor)
      throw SingularMatrixError(k, "reference_householder_qr: rank deficient at column " +
                                       std::to_string(k));
    Vector v(m, 0.0);
    for (std::size_t i = k; i < m; ++i) v[i] = work(i, k);
    v[k] += (work(k, k) >= 0.0 ? norm_x : -norm_x);
    double vnorm = 0.0;
    for (std::size_t i = k; i < m; ++i) vnorm += v[i] * v[i];
    vnorm = std::sqrt(vnorm);
    for (std::size_t i = k; i < m; ++i) v[i] /= vnorm;

    for (std::size_t j = k; j < n; ++j) {
      double dot = 0.0;
      for (std::size_t i = k; i < m; ++i) dot += v[i] * work(i, j);
      for (std::size_t i = k; i < m; ++i) work(i, j) -= 2.0 * dot * v[i];
    }
    reflectors.push_back(std::move(v));
  }

  // Thin Q: apply the reflectors in reverse to the first n identity columns.
  Matrix q(m, n);
  for (std::size_t j = 0; j < n; ++j) {
    auto col = q.column(j);
    col[j] = 1.0;
    for (std::size_t kk = n; kk-- > 0;) {
      const Vector& v = reflectors[kk];
      double dot = 0.0;
      for (std::size_t i = kk; i < m; ++i) dot += v[i] * col[i];
      for (std::size_t i = kk; i < m; ++i) col[i] -= 2.0 * dot * v[i];
    }
  }

  Matrix r(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i <= j; ++i) r(i, j) = work(i, j);

  // Fix signs for the positive-diagonal convention.
  for (std::size_t k = 0; k < n; ++k) {
    if (r(k, k) < 0.0) {
      for (std::size_t j = k; j < n; ++j) r(k, j) = -r(k, j);
      auto col = q.column(k);
      for (std::size_t i = 0; i < m; ++i) col[i] = -col[i];
    }
  }
  return {std::move(q), std::move(r)};
}

Matrix read_matrix(std::istream& in) {
  std::size_t rows = 0, cols = 0;
  if (!(in >> rows >> cols)) throw IoError("matrix parse: expected header line \"m n\"");
  if (rows == 0 || cols == 0) throw IoError("matrix parse: dimensions must be positive");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      double v = 0.0;
      if (!(in >> v))
        throw IoError("matrix parse: too few values (stopped at row " + std::to_string(i + 1) +
                      ")");
      if (!std::isfinite(v))
        throw IoError("matrix parse: non-finite value at row " + std::to_string(i + 1));
      m(i, j) = v;
    }
  }
  return m;
}

Matrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open \"" + path + "\" for reading");
  try {
    return read_matrix(in);
  } catch (const IoError& e) {
    throw IoError(std::string(e.what()) + " in \"" + path + "\"");
  }
}

void write_matrix(std::ostream& out, const Matrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  char buf[40];
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g", m(i, j));
      out << (j == 0 ? "" : " ") << buf;
    }
    out << '\n';
  }
}

void write_matrix_file(const std::string& path, const Matrix& m) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open \"" + path + "\" for writing");
  write_matrix(out, m);
  if (!out) throw IoError("write failed for \"" + path + "\"");
}

}  // namespace normqr
