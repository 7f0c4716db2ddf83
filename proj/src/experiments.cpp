#include "normqr/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "normqr/rng.hpp"

namespace normqr {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

Matrix gaussian_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix m(rows, cols);
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = rng.gaussian();
  return m;
}

// %.17g round-trips doubles, keeping repeated runs byte-identical.
std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

Matrix random_matrix_with_condition(int m, double kappa, std::uint64_t seed) {
  if (m < 2) throw std::invalid_argument("random_matrix_with_condition: m must be >= 2");
  if (!(kappa >= 1.0)) throw std::invalid_argument("random_matrix_with_condition: kappa must be >= 1");
  const std::size_t n = static_cast<std::size_t>(m);

  Rng rng_u(seed, 0xA11CE5EEDULL);
  Rng rng_v(seed, 0xB0B5EEDULL);
  const Matrix u = reference_householder_qr(gaussian_matrix(n, n, rng_u)).q;
  const Matrix v = reference_householder_qr(gaussian_matrix(n, n, rng_v)).q;

  // sigma_i = kappa^(-i/(m-1)), i.e. log-spaced from 1 down to 1/kappa.
  Vector sigma(n);
  for (std::size_t i = 0; i < n; ++i)
    sigma[i] = std::pow(kappa, -static_cast<double>(i) / static_cast<double>(n - 1));

  Matrix a(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += u(i, k) * sigma[k] * v(j, k);
      a(i, j) = s;
    }
  return a;
}

SweepResult run_bound_sweep(const ExperimentConfig& cfg) {
  if (cfg.trials < 1) throw std::invalid_argument("run_bound_sweep: trials must be >= 1");
  for (int m : cfg.m_list)
    if (m < 2) throw std::invalid_argument("run_bound_sweep: m must be >= 2");
  for (double kappa : cfg.kappa_list)
    if (!(kappa >= 1.0)) throw std::invalid_argument("run_bound_sweep: kappa must be >= 1");

  constexpr int kDiagnosticTrials = 200;
  SweepResult result;
  result.records.reserve(cfg.m_list.size() * cfg.kappa_list.size() *
                         static_cast<std::size_t>(cfg.trials));

  for (std::size_t mi = 0; mi < cfg.m_list.size(); ++mi) {
    for (std::size_t ki = 0; ki < cfg.kappa_list.size(); ++ki) {
      for (int trial = 0; trial < cfg.trials; ++trial) {
        const int m = cfg.m_list[mi];
        const double kappa = cfg.kappa_list[ki];
        SweepRecord rec;
        rec.norm_kind = cfg.norm_kind;
        rec.m = m;
        rec.kappa_target = kappa;
        rec.trial = trial;

        // Stream id encodes the grid position so trials stay independent.
        const std::uint64_t stream =
            (static_cast<std::uint64_t>(mi) << 40) ^ (static_cast<std::uint64_t>(ki) << 20) ^
            static_cast<std::uint64_t>(trial);
        Rng derive(cfg.seed, stream);
        const std::uint64_t matrix_seed = derive.next_u64();
        const std::uint64_t diag_seed = derive.next_u64();
        try {
          const Matrix a = random_matrix_with_condition(m, kappa, matrix_seed);
          rec.kappa_actual = condition_number(a, NormKind::L2);
          const QRFactors f = gen_qr(a, cfg.norm_kind);
          if (f.q.cols() != static_cast<std::size_t>(m))
            throw FactorizationError("run_bound_sweep: unexpected breakdown on a full-rank input");
          const BoundReport rep = bound_report(f, kDiagnosticTrials, diag_seed);
          rec.forward_norm = rep.forward_norm;
          rec.inverse_norm = rep.inverse_norm;
          rec.cond_q = rep.cond_q;
        } catch (const std::runtime_error&) {
          rec.kappa_actual = kNaN;
          rec.forward_norm = kNaN;
          rec.inverse_norm = kNaN;
          rec.cond_q = kNaN;
          ++result.failures;
        }
        result.records.push_back(rec);
      }
    }
  }

  if (!cfg.output_path.empty()) {
    std::ofstream out(cfg.output_path);
    if (!out) throw IoError("cannot open \"" + cfg.output_path + "\" for writing");
    out << "# kappa_target/kappa_actual are 2-norm condition numbers of A;"
           " forward/inverse/cond are induced norms of Q in the working norm\n";
    out << "norm,m,kappa_target,kappa_actual,trial,forward_norm,inverse_norm,cond_q\n";
    for (const SweepRecord& r : result.records) {
      out << norm_name(r.norm_kind) << ',' << r.m << ',' << fmt(r.kappa_target) << ','
          << fmt(r.kappa_actual) << ',' << r.trial << ',' << fmt(r.forward_norm) << ','
          << fmt(r.inverse_norm) << ',' << fmt(r.cond_q) << '\n';
    }
    if (!out) throw IoError("write failed for \"" + cfg.output_path + "\"");
  }
  return result;
}

Matrix vandermonde(int m, int n) {
  if (m < 2 || n < 1) throw std::invalid_argument("vandermonde: need m >= 2 and n >= 1");
  Matrix v(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
  const double h = 2.0 / (m - 1);
  for (int i = 0; i < m; ++i) {
    const double x = -1.0 + h * i;
    double p = 1.0;
    for (int j = 0; j < n; ++j) {
      v(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = p;
      p *= x;
    }
  }
  return v;
}

double chebyshev_t(int n, double x) {
  if (n == 0) return 1.0;
  if (n == 1) return x;
  double tkm1 = 1.0, tk = x;
  for (int k = 2; k <= n; ++k) {
    const double next = 2.0 * x * tk - tkm1;
    tkm1 = tk;
    tk = next;
  }
  return tk;
}

double pearson_correlation(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size() || u.empty())
    throw std::invalid_argument("pearson_correlation: size mismatch");
  const double n = static_cast<double>(u.size());
  double mu = 0.0, mv = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    mu += u[i];
    mv += v[i];
  }
  mu /= n;
  mv /= n;
  double suv = 0.0, suu = 0.0, svv = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double du = u[i] - mu;
    const double dv = v[i] - mv;
    suv += du * dv;
    suu += du * du;
    svv += dv * dv;
  }
  if (suu == 0.0 || svv == 0.0) return 0.0;
  return suv / std::sqrt(suu * svv);
}

BasisExperimentResult run_basis_experiment(int m, int n, NormKind kind,
                                           const std::string& output_path) {
  if (m < n || n < 1) throw std::invalid_argument("run_basis_experiment: need m >= n >= 1");
  const Matrix v = vandermonde(m, n);

  BasisExperimentResult result;
  result.x.resize(static_cast<std::size_t>(m));
  const double h = 2.0 / (m - 1);
  for (int i = 0; i < m; ++i) result.x[static_cast<std::size_t>(i)] = -1.0 + h * i;

  result.factors = gen_qr(v, kind);
  const Matrix& q = result.factors.q;

  if (kind == NormKind::LInf) {
    // Column j of Q is the normalized minimax residual of fitting x^(j-1)
    // by lower degrees, which should track the Chebyshev polynomial of the
    // same degree on a fine grid.
    for (std::size_t j = 1; j < q.cols(); ++j) {
      Vector cheb(result.x.size());
      for (std::size_t i = 0; i < cheb.size(); ++i)
        cheb[i] = chebyshev_t(static_cast<int>(j), result.x[i]);
      result.cheb_corr.push_back(std::fabs(pearson_correlation(q.column(j), cheb)));
    }
  }

  if (!output_path.empty()) {
    std::ofstream out(output_path);
    if (!out) throw IoError("cannot open \"" + output_path + "\" for writing");
    out << "x";
    for (std::size_t j = 0; j < q.cols(); ++j) out << ",q" << (j + 1);
    out << '\n';
    for (std::size_t i = 0; i < result.x.size(); ++i) {
      out << fmt(result.x[i]);
      for (std::size_t j = 0; j < q.cols(); ++j) out << ',' << fmt(q(i, j));
      out << '\n';
    }
    for (std::size_t j = 0; j < result.cheb_corr.size(); ++j)
      out << "# cheb_corr_" << (j + 2) << '=' << fmt(result.cheb_corr[j]) << '\n';
    if (!out) throw IoError("write failed for \"" + output_path + "\"");
  }
  return result;
}

}  // namespace normqr
