#pragma once

#include <cstdint>

#include "normqr/genqr.hpp"

namespace normqr {

struct BoundCheck {
  double worst_ratio = 0.0;
  bool pass = false;
};

// Samples `trials` vectors x (standard normal entries, unit working norm,
// stream derived from the seed) and reports the largest ||Qx|| / ||x||_1.
// Passes when that ratio stays below 1 + 1e-8, the endpoint of the forward
// bound's proof chain.
BoundCheck check_forward_bound(const QRFactors& f, int trials, std::uint64_t seed);

// Same sampling; reports the smallest ||Qx|| / (2^-m ||x||_inf). Passes when
// the ratio stays above 1 - 1e-8, so Q cannot shrink any sampled vector
// below the proof's 2^-m floor.
BoundCheck check_inverse_bound(const QRFactors& f, int trials, std::uint64_t seed);

// Counts violations of || sum_{j<=k} Q_j x_j || >= |x_k| - 1e-8 over all
// sampled x and prefix lengths k; zero on any valid factorization.
int check_optimality_lemma(const QRFactors& f, int trials, std::uint64_t seed);

// One-stop conditioning summary of a square full-rank factorization.
struct BoundReport {
  double forward_norm = 0.0;          // ||Q|| induced, working norm
  double inverse_norm = 0.0;          // ||Q^-1|| induced, working norm
  double cond_q = 0.0;                // product of the two
  double worst_forward_sample = 0.0;  // max ||Qx|| / ||x||_1
  double worst_inverse_sample = 0.0;  // min ||Qx|| * 2^m / ||x||_inf
  int lemma_violations = 0;
};

BoundReport bound_report(const QRFactors& f, int trials, std::uint64_t seed);

}  // namespace normqr
