#pragma once

// Dense real matrices, symmetric eigendecomposition and functional calculus.
//
// Everything here is a value type; operations are free functions that never
// mutate their arguments. Sizes are small (n <= 64), so storage is a flat
// row-major std::vector<double>.

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "opineq/errors.hpp"

namespace opineq {

using Vector = std::vector<double>;

/// General dense rows x cols matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> data);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<double>>& rows);
  static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  std::span<const double> data() const { return data_; }

  Matrix transpose() const;
  double frobenius_norm() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(double s, const Matrix& a);
Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& x);

double dot(const Vector& x, const Vector& y);
double norm2(const Vector& x);

/// Real symmetric n x n matrix. Construction from a general square matrix
/// symmetrizes it as (X + X^T) / 2, so entries(i, j) == entries(j, i) exactly.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(const Matrix& x);

  static SymMatrix identity(std::size_t n);
  static SymMatrix zero(std::size_t n);
  static SymMatrix diagonal(std::span<const double> d);
  static SymMatrix diagonal(std::initializer_list<double> d);
  static SymMatrix scalar(double v) { return diagonal({v}); }
  static SymMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t dim() const { return m_.rows(); }
  double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const Matrix& matrix() const { return m_; }

  double frobenius_norm() const { return m_.frobenius_norm(); }
  double trace() const;

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  Matrix m_;
};

SymMatrix operator+(const SymMatrix& a, const SymMatrix& b);
SymMatrix operator-(const SymMatrix& a, const SymMatrix& b);
SymMatrix operator*(double s, const SymMatrix& a);
/// Product of two symmetric matrices; generally not symmetric.
Matrix operator*(const SymMatrix& a, const SymMatrix& b);

/// T^T X T for an n x k matrix T; the result is k x k.
SymMatrix congruence(const Matrix& t, const SymMatrix& x);
/// S X S for symmetric S.
SymMatrix sandwich(const SymMatrix& s, const SymMatrix& x);
/// Block diagonal matrix diag(blocks[0], blocks[1], ...).
SymMatrix block_diagonal(std::span<const SymMatrix> blocks);

/// Columns of `vectors` are orthonormal eigenvectors; `values` sorted descending.
struct EigenDecomposition {
  Matrix vectors;
  Vector values;
};

/// Cyclic Jacobi eigensolver. Converges when the off-diagonal Frobenius norm
/// drops to 1e-14 * ||A||_F; throws NoConvergence after 100 sweeps.
EigenDecomposition eigh(const SymMatrix& a);

double lambda_min(const SymMatrix& a);
double lambda_max(const SymMatrix& a);

struct SpectralBounds {
  double m;
  double M;

  /// Throws InputError unless 0 < m <= M (both finite).
  SpectralBounds(double m, double M);
};

/// Symmetric matrix with verified strictly positive spectrum. Caches the
/// extreme eigenvalues found at construction.
class SpdMatrix {
 public:
  /// Throws NotPositiveDefinite if the smallest eigenvalue is not > 0.
  explicit SpdMatrix(SymMatrix a);

  const SymMatrix& sym() const { return a_; }
  operator const SymMatrix&() const { return a_; }

  std::size_t dim() const { return a_.dim(); }
  double operator()(std::size_t i, std::size_t j) const { return a_(i, j); }
  double lambda_min() const { return lmin_; }
  double lambda_max() const { return lmax_; }
  SpectralBounds spectrum() const { return {lmin_, lmax_}; }

 private:
  SymMatrix a_;
  double lmin_ = 0.0;
  double lmax_ = 0.0;
};

/// f(A) = Q diag(f(lambda)) Q^T. Throws DomainError if f is not finite at an
/// eigenvalue.
SymMatrix apply_function(const SymMatrix& a, const std::function<double(double)>& f);

/// Smallest eigenvalue ratio accepted for fractional or negative powers.
inline constexpr double kConditioningFloor = 1e-12;

/// A^p via functional calculus. power(A, 0) = I and power(A, 1) = A exactly.
/// Throws IllConditioned for fractional or negative p when
/// lambda_min <= 1e-12 * lambda_max.
SpdMatrix power(const SpdMatrix& a, double p);
SpdMatrix inverse(const SpdMatrix& a);
SpdMatrix sqrt(const SpdMatrix& a);

/// A^p for positive semidefinite A and p > 0. Eigenvalues in [-tol, 0) are
/// treated as zero; anything more negative throws NotPositiveDefinite.
SymMatrix psd_power(const SymMatrix& a, double p, double tol_rel = 1e-9);

/// max |lambda_i|.
double operator_norm(const SymMatrix& a);
/// Largest singular value of a general matrix.
double spectral_norm(const Matrix& x);

/// Numerical tolerance for Loewner-order comparisons. The threshold is
/// rel * max(1, scale) unless an absolute override is set.
struct TolerancePolicy {
  double rel = 1e-9;
  std::optional<double> abs;

  double threshold(double scale) const;
  static TolerancePolicy absolute(double value) { return {0.0, value}; }
};

struct OrderResult {
  bool holds;
  double gap;  ///< lambda_min(B - A)
  double tolerance;
};

/// A <= B in the Loewner order. Scale for the tolerance: max(1, ||A||, ||B||).
OrderResult loewner_leq(const SymMatrix& a, const SymMatrix& b, const TolerancePolicy& tol = {});

/// Whether [[tI, X], [X^T, tI]] is positive semidefinite, i.e. ||X|| <= t.
bool block_norm_check(const Matrix& x, double t, const TolerancePolicy& tol = {});

}  // namespace opineq
