#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace normqr {

using Vector = std::vector<double>;

// Working norm selecting the subproblem type and every conditioning
// measurement downstream.
enum class NormKind { L1, L2, LInf };

const char* norm_name(NormKind kind);
// Accepts "l1", "l2", "linf" (case-insensitive); throws std::invalid_argument.
NormKind parse_norm_name(const std::string& name);

// Thrown by lu_invert (and the Householder factorization) when a pivot falls
// below the singularity threshold. Carries the offending pivot index.
class SingularMatrixError : public std::runtime_error {
 public:
  SingularMatrixError(std::size_t pivot_index, const std::string& message)
      : std::runtime_error(message), pivot_index_(pivot_index) {}
  std::size_t pivot_index() const { return pivot_index_; }

 private:
  std::size_t pivot_index_;
};

// File open/parse failures for the matrix text format and CSV outputs.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Dense real matrix, column-major so that column extraction is a contiguous
// view. The factorization walks the input column by column, which makes this
// the natural layout.
class Matrix {
 public:
  Matrix() = default;

  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n);

  // Rows listed top to bottom, matching the text format presentation.
  static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  double& operator()(std::size_t i, std::size_t j) { return data_[j * rows_ + i]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[j * rows_ + i]; }

  std::span<const double> column(std::size_t j) const {
    return {data_.data() + j * rows_, rows_};
  }
  std::span<double> column(std::size_t j) { return {data_.data() + j * rows_, rows_}; }

  Vector column_copy(std::size_t j) const;

  // Grows the matrix by one column on the right; `col` must have rows() values.
  void append_column(std::span<const double> col);

  Matrix transposed() const;
  bool all_finite() const;

  const std::vector<double>& data() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, std::span<const double> x);
Matrix operator-(const Matrix& a, const Matrix& b);

// Largest absolute entry; handy for elementwise error measurements.
double max_abs(const Matrix& m);

// l1 / l2 / l-infinity vector norms. Rejects non-finite entries.
double vector_norm(std::span<const double> x, NormKind kind);

// Induced operator norm. L1 is the max absolute column sum, LInf the max
// absolute row sum. L2 is the top singular value estimated by power
// iteration on M^T M to relative tolerance 1e-10 with an iteration cap of
// 10*max(rows, cols); the last estimate is returned if the cap is reached.
double induced_matrix_norm(const Matrix& m, NormKind kind);

// Inverse via partial-pivot LU. A pivot of magnitude <= 1e-12 * ||M||_inf
// raises SingularMatrixError naming the pivot index.
Matrix lu_invert(const Matrix& m);

// ||M|| * ||M^{-1}|| in the induced norm of `kind`.
double condition_number(const Matrix& m, NormKind kind);

struct HouseholderQR {
  Matrix q;  // m x n, orthonormal columns
  Matrix r;  // n x n, upper triangular, positive diagonal
};

// Thin Householder QR used as the l2 test oracle. Requires m >= n and full
// column rank; the positive-diagonal convention makes the factors unique.
HouseholderQR reference_householder_qr(const Matrix& a);

// Dense matrix text format shared by all tools: first line "m n", then m
// lines of n space-separated values (scientific notation accepted).
Matrix read_matrix(std::istream& in);
Matrix read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const Matrix& m);
void write_matrix_file(const std::string& path, const Matrix& m);

}  // namespace normqr
