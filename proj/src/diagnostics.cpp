#include "normqr/diagnostics.hpp"

#include <cmath>

#include "normqr/rng.hpp"

namespace normqr {

namespace {

// Unit working-norm sample with standard normal entries. Trial t of a check
// draws from stream (seed, t) so the loop order never matters.
Vector sample_direction(std::size_t dim, NormKind kind, std::uint64_t seed, std::uint64_t trial) {
  Rng rng(seed, trial);
  Vector x(dim);
  double norm = 0.0;
  do {
    for (double& v : x) v = rng.gaussian();
    norm = vector_norm(x, kind);
  } while (norm == 0.0);
  for (double& v : x) v /= norm;
  return x;
}

}  // namespace

BoundCheck check_forward_bound(const QRFactors& f, int trials, std::uint64_t seed) {
  const std::size_t dim = f.q.cols();
  BoundCheck out;
  for (int t = 0; t < trials; ++t) {
    const Vector x = sample_direction(dim, f.norm_kind, seed, static_cast<std::uint64_t>(t));
    const Vector qx = f.q * std::span<const double>(x);
    const double ratio = vector_norm(qx, f.norm_kind) / vector_norm(x, NormKind::L1);
    out.worst_ratio = std::max(out.worst_ratio, ratio);
  }
  out.pass = out.worst_ratio <= 1.0 + 1e-8;
  return out;
}

BoundCheck check_inverse_bound(const QRFactors& f, int trials, std::uint64_t seed) {
  const std::size_t dim = f.q.cols();
  const double floor = std::ldexp(1.0, -static_cast<int>(f.q.rows()));  // 2^-m
  BoundCheck out;
  out.worst_ratio = std::numeric_limits<double>::infinity();
  for (int t = 0; t < trials; ++t) {
    const Vector x = sample_direction(dim, f.norm_kind, seed, static_cast<std::uint64_t>(t));
    const Vector qx = f.q * std::span<const double>(x);
    const double ratio =
        vector_norm(qx, f.norm_kind) / (floor * vector_norm(x, NormKind::LInf));
    out.worst_ratio = std::min(out.worst_ratio, ratio);
  }
  out.pass = out.worst_ratio >= 1.0 - 1e-8;
  return out;
}

int check_optimality_lemma(const QRFactors& f, int trials, std::uint64_t seed) {
  const std::size_t dim = f.q.cols();
  const std::size_t m = f.q.rows();
  int violations = 0;
  Vector prefix(m);
  for (int t = 0; t < trials; ++t) {
    const Vector x = sample_direction(dim, f.norm_kind, seed, static_cast<std::uint64_t>(t));
    std::fill(prefix.begin(), prefix.end(), 0.0);
    for (std::size_t k = 0; k < dim; ++k) {
      auto col = f.q.column(k);
      for (std::size_t i = 0; i < m; ++i) prefix[i] += col[i] * x[k];
      if (x[k] == 0.0) continue;
      if (vector_norm(prefix, f.norm_kind) < std::fabs(x[k]) - 1e-8) ++violations;
    }
  }
  return violations;
}

BoundReport bound_report(const QRFactors& f, int trials, std::uint64_t seed) {
  if (f.q.rows() != f.q.cols())
    throw std::invalid_argument("bound_report: requires a square full-rank factorization");
  BoundReport rep;
  rep.forward_norm = induced_matrix_norm(f.q, f.norm_kind);
  rep.inverse_norm = induced_matrix_norm(lu_invert(f.q), f.norm_kind);
  rep.cond_q = rep.forward_norm * rep.inverse_norm;

  // Distinct sub-streams keep the three sampled checks independent.
  rep.worst_forward_sample = check_forward_bound(f, trials, seed ^ 0x1111111111111111ULL).worst_ratio;
  rep.worst_inverse_sample = check_inverse_bound(f, trials, seed ^ 0x2222222222222222ULL).worst_ratio;
  rep.lemma_violations = check_optimality_lemma(f, trials, seed ^ 0x3333333333333333ULL);
  return rep;
}

}  // namespace normqr
