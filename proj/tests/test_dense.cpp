#include <doctest.h>

#include <cmath>
#include <sstream>

#include "normqr/dense.hpp"
#include "normqr/experiments.hpp"
#include "normqr/rng.hpp"
#include "oracles.hpp"

using namespace normqr;

TEST_CASE("vector norms on (3, -4)") {
  Vector x{3.0, -4.0};
  CHECK(vector_norm(x, NormKind::L1) == doctest::Approx(7.0));
  CHECK(vector_norm(x, NormKind::L2) == doctest::Approx(5.0));
  CHECK(vector_norm(x, NormKind::LInf) == doctest::Approx(4.0));
}

TEST_CASE("vector norm rejects bad input") {
  CHECK_THROWS_AS(vector_norm(Vector{}, NormKind::L1), std::invalid_argument);
  CHECK_THROWS_AS(vector_norm(Vector{1.0, std::nan("")}, NormKind::L2), std::invalid_argument);
  CHECK_THROWS_AS(vector_norm(Vector{std::numeric_limits<double>::infinity()}, NormKind::LInf),
                  std::invalid_argument);
  CHECK(vector_norm(Vector{0.0, 0.0}, NormKind::L2) == 0.0);
}

TEST_CASE("norm ordering linf <= l2 <= l1 <= m linf") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    const std::size_t m = 1 + rng.below(12);
    Vector x(m);
    for (double& v : x) v = rng.gaussian();
    const double l1 = vector_norm(x, NormKind::L1);
    const double l2 = vector_norm(x, NormKind::L2);
    const double linf = vector_norm(x, NormKind::LInf);
    CHECK(linf <= l2 * (1 + 1e-12));
    CHECK(l2 <= l1 * (1 + 1e-12));
    CHECK(l1 <= static_cast<double>(m) * linf * (1 + 1e-12));
  }
}

TEST_CASE("induced matrix norms, closed forms") {
  const Matrix id = Matrix::identity(2);
  CHECK(induced_matrix_norm(id, NormKind::L1) == doctest::Approx(1.0));
  CHECK(induced_matrix_norm(id, NormKind::L2) == doctest::Approx(1.0));
  CHECK(induced_matrix_norm(id, NormKind::LInf) == doctest::Approx(1.0));

  const Matrix m = Matrix::from_rows({{1, 2}, {3, 4}});
  CHECK(induced_matrix_norm(m, NormKind::L1) == doctest::Approx(6.0));
  CHECK(induced_matrix_norm(m, NormKind::LInf) == doctest::Approx(7.0));
}

TEST_CASE("induced norm consistency ||Mx|| <= ||M|| ||x||") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Matrix m = oracle::gaussian_matrix(6, 4, 100 + seed);
    for (NormKind kind : {NormKind::L1, NormKind::L2, NormKind::LInf}) {
      const double norm = induced_matrix_norm(m, kind);
      Rng rng(seed * 31 + 7);
      for (int t = 0; t < 100; ++t) {
        Vector x(4);
        for (double& v : x) v = rng.gaussian();
        const Vector mx = m * std::span<const double>(x);
        CHECK(vector_norm(mx, kind) <= (1 + 1e-10) * norm * vector_norm(x, kind));
      }
    }
  }
}

TEST_CASE("spectral norm matches the known values of small cases") {
  // diag(3, 1) has top singular value 3.
  Matrix d(2, 2);
  d(0, 0) = 3.0;
  d(1, 1) = 1.0;
  CHECK(induced_matrix_norm(d, NormKind::L2) == doctest::Approx(3.0).epsilon(1e-9));
  // Rank-one uv^T has norm ||u||_2 ||v||_2.
  Matrix r1(2, 2);
  r1(0, 0) = 1.0;
  r1(0, 1) = 2.0;
  r1(1, 0) = 2.0;
  r1(1, 1) = 4.0;
  CHECK(induced_matrix_norm(r1, NormKind::L2) == doctest::Approx(5.0).epsilon(1e-9));
}

TEST_CASE("lu_invert on hand cases") {
  const Matrix id = Matrix::identity(3);
  CHECK(max_abs(lu_invert(id) - id) == doctest::Approx(0.0));

  Matrix d(2, 2);
  d(0, 0) = 2.0;
  d(1, 1) = 4.0;
  const Matrix dinv = lu_invert(d);
  CHECK(dinv(0, 0) == doctest::Approx(0.5));
  CHECK(dinv(1, 1) == doctest::Approx(0.25));
  CHECK(dinv(0, 1) == doctest::Approx(0.0));

  const Matrix l = Matrix::from_rows({{1, 0}, {1, 1}});
  const Matrix linv = lu_invert(l);
  CHECK(linv(0, 0) == doctest::Approx(1.0));
  CHECK(linv(1, 0) == doctest::Approx(-1.0));
  CHECK(linv(1, 1) == doctest::Approx(1.0));
}

TEST_CASE("lu_invert residual stays small on random matrices") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::size_t n = 2 + seed % 9;
    const Matrix m = oracle::gaussian_matrix(n, n, 500 + seed);
    const Matrix prod = m * lu_invert(m);
    const double kappa_inf = condition_number(m, NormKind::LInf);
    CHECK(induced_matrix_norm(prod - Matrix::identity(n), NormKind::LInf) <= 1e-10 * kappa_inf);
  }
}

TEST_CASE("lu_invert residual scales with conditioning up to kappa 1e8") {
  for (double kappa : {1e4, 1e8}) {
    const Matrix m = random_matrix_with_condition(8, kappa, 640);
    const Matrix prod = m * lu_invert(m);
    const double kappa_inf = condition_number(m, NormKind::LInf);
    CHECK(induced_matrix_norm(prod - Matrix::identity(8), NormKind::LInf) <= 1e-10 * kappa_inf);
  }
}

TEST_CASE("lu_invert reports the singular pivot") {
  Matrix s = Matrix::from_rows({{1, 2}, {2, 4}});
  CHECK_THROWS_AS(lu_invert(s), SingularMatrixError);
  try {
    lu_invert(s);
  } catch (const SingularMatrixError& e) {
    CHECK(e.pivot_index() == 1);
  }
}

TEST_CASE("condition number basics") {
  CHECK(condition_number(Matrix::identity(4), NormKind::L1) == doctest::Approx(1.0));
  CHECK(condition_number(Matrix::identity(4), NormKind::L2) == doctest::Approx(1.0));
  Matrix d(2, 2);
  d(0, 0) = 1.0;
  d(1, 1) = 10.0;
  CHECK(condition_number(d, NormKind::L1) == doctest::Approx(10.0));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const std::size_t n = 2 + seed % 6;
    const Matrix m = oracle::gaussian_matrix(n, n, 900 + seed);
    CHECK(condition_number(m, NormKind::L1) >= 1.0 - 1e-12);
    CHECK(condition_number(m, NormKind::LInf) >= 1.0 - 1e-12);
  }
}

TEST_CASE("householder qr on hand cases") {
  const auto qr_id = reference_householder_qr(Matrix::identity(3));
  CHECK(max_abs(qr_id.q - Matrix::identity(3)) <= 1e-14);
  CHECK(max_abs(qr_id.r - Matrix::identity(3)) <= 1e-14);

  Matrix col(2, 1);
  col(0, 0) = 3.0;
  col(1, 0) = 4.0;
  const auto qr_col = reference_householder_qr(col);
  CHECK(qr_col.q(0, 0) == doctest::Approx(0.6));
  CHECK(qr_col.q(1, 0) == doctest::Approx(0.8));
  CHECK(qr_col.r(0, 0) == doctest::Approx(5.0));
}

TEST_CASE("householder qr self-check identities on random input") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Matrix a = oracle::gaussian_matrix(6, 4, 1234 + seed);
    const auto qr = reference_householder_qr(a);
    // Q^T Q = I
    Matrix qtq(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        double s = 0.0;
        for (std::size_t k = 0; k < 6; ++k) s += qr.q(k, i) * qr.q(k, j);
        qtq(i, j) = s;
      }
    CHECK(max_abs(qtq - Matrix::identity(4)) <= 1e-12);
    CHECK(max_abs(qr.q * qr.r - a) <= 1e-12 * max_abs(a));
    for (std::size_t k = 0; k < 4; ++k) CHECK(qr.r(k, k) > 0.0);
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t i = j + 1; i < 4; ++i) CHECK(qr.r(i, j) == 0.0);
  }
}

TEST_CASE("householder qr rejects rank-deficient input") {
  Matrix a(3, 2);
  a(0, 0) = 1.0;
  a(1, 0) = 2.0;
  a(2, 0) = 3.0;
  a(0, 1) = 2.0;
  a(1, 1) = 4.0;
  a(2, 1) = 6.0;
  CHECK_THROWS_AS(reference_householder_qr(a), SingularMatrixError);
}

TEST_CASE("matrix text format round trip") {
  const Matrix a = oracle::gaussian_matrix(3, 4, 77);
  std::stringstream ss;
  write_matrix(ss, a);
  const Matrix back = read_matrix(ss);
  REQUIRE(back.rows() == 3);
  REQUIRE(back.cols() == 4);
  CHECK(max_abs(back - a) == 0.0);  // %.17g round-trips exactly
}

TEST_CASE("matrix text format accepts scientific notation") {
  std::stringstream ss("2 2\n1e3 -2.5E-2\n0.5 4\n");
  const Matrix m = read_matrix(ss);
  CHECK(m(0, 0) == doctest::Approx(1000.0));
  CHECK(m(0, 1) == doctest::Approx(-0.025));
}

TEST_CASE("matrix text format parse errors") {
  std::stringstream truncated("2 2\n1 2\n3\n");
  CHECK_THROWS_AS(read_matrix(truncated), IoError);
  std::stringstream garbage("not a matrix");
  CHECK_THROWS_AS(read_matrix(garbage), IoError);
  CHECK_THROWS_AS(read_matrix_file("/nonexistent/path/m.txt"), IoError);
}

TEST_CASE("norm names parse and print") {
  CHECK(parse_norm_name("l1") == NormKind::L1);
  CHECK(parse_norm_name("L2") == NormKind::L2);
  CHECK(parse_norm_name("linf") == NormKind::LInf);
  CHECK_THROWS_AS(parse_norm_name("l3"), std::invalid_argument);
  CHECK(std::string(norm_name(NormKind::LInf)) == "linf");
}
