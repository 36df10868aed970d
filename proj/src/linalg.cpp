#include "opineq/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace opineq {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch(std::string(what) + ": shapes " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + " and " + std::to_string(b.rows()) + "x" +
                            std::to_string(b.cols()));
  }
}

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagonalTolerance = 1e-14;

}  // namespace

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) {
    throw DimensionMismatch("Matrix: data size does not match shape");
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) return {};
  const std::size_t cols = rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionMismatch("Matrix::from_rows: ragged rows");
    std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(i * cols));
  }
  return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  std::vector<std::vector<double>> v;
  for (const auto& r : rows) v.emplace_back(r);
  return from_rows(v);
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

double Matrix::frobenius_norm() const {
  double s = 0.0;
  for (double x : data_) s += x * x;
  return std::sqrt(s);
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "matrix sum");
  std::vector<double> d(a.data().begin(), a.data().end());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] += b.data()[i];
  return Matrix(a.rows(), a.cols(), std::move(d));
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "matrix difference");
  std::vector<double> d(a.data().begin(), a.data().end());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] -= b.data()[i];
  return Matrix(a.rows(), a.cols(), std::move(d));
}

Matrix operator*(double s, const Matrix& a) {
  std::vector<double> d(a.data().begin(), a.data().end());
  for (double& x : d) x *= s;
  return Matrix(a.rows(), a.cols(), std::move(d));
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product: inner dimensions differ");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

Vector operator*(const Matrix& a, const Vector& x) {
  if (a.cols() != x.size()) throw DimensionMismatch("matrix-vector product: dimensions differ");
  Vector y(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

double dot(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) throw DimensionMismatch("dot: lengths differ");
  return std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
}

double norm2(const Vector& x) { return std::sqrt(dot(x, x)); }

// ---------------------------------------------------------------------------
// SymMatrix

SymMatrix::SymMatrix(const Matrix& x) : m_(x.rows(), x.cols()) {
  if (!x.square()) throw DimensionMismatch("SymMatrix: matrix is not square");
  if (x.rows() == 0) throw DimensionMismatch("SymMatrix: dimension must be at least 1");
  const std::size_t n = x.rows();
  for (std::size_t i = 0; i < n; ++i) {
    m_(i, i) = x(i, i);
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = 0.5 * (x(i, j) + x(j, i));
      m_(i, j) = v;
      m_(j, i) = v;
    }
  }
}

SymMatrix SymMatrix::identity(std::size_t n) { return SymMatrix(Matrix::identity(n)); }
SymMatrix SymMatrix::zero(std::size_t n) { return SymMatrix(Matrix(n, n)); }

SymMatrix SymMatrix::diagonal(std::span<const double> d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return SymMatrix(m);
}

SymMatrix SymMatrix::diagonal(std::initializer_list<double> d) {
  return diagonal(std::span<const double>(d.begin(), d.size()));
}

SymMatrix SymMatrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  return SymMatrix(Matrix::from_rows(rows));
}

double SymMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) t += m_(i, i);
  return t;
}

SymMatrix operator+(const SymMatrix& a, const SymMatrix& b) { return SymMatrix(a.matrix() + b.matrix()); }
SymMatrix operator-(const SymMatrix& a, const SymMatrix& b) { return SymMatrix(a.matrix() - b.matrix()); }
SymMatrix operator*(double s, const SymMatrix& a) { return SymMatrix(s * a.matrix()); }
Matrix operator*(const SymMatrix& a, const SymMatrix& b) { return a.matrix() * b.matrix(); }

SymMatrix congruence(const Matrix& t, const SymMatrix& x) {
  if (t.rows() != x.dim()) throw DimensionMismatch("congruence: T rows must match X dimension");
  return SymMatrix(t.transpose() * (x.matrix() * t));
}

SymMatrix sandwich(const SymMatrix& s, const SymMatrix& x) {
  if (s.dim() != x.dim()) throw DimensionMismatch("sandwich: dimensions differ");
  return SymMatrix(s.matrix() * (x.matrix() * s.matrix()));
}

SymMatrix block_diagonal(std::span<const SymMatrix> blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.dim();
  Matrix m(n, n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.dim(); ++i)
      for (std::size_t j = 0; j < b.dim(); ++j) m(off + i, off + j) = b(i, j);
    off += b.dim();
  }
  return SymMatrix(m);
}

// ---------------------------------------------------------------------------
// Eigendecomposition

EigenDecomposition eigh(const SymMatrix& input) {
  const std::size_t n = input.dim();
  Matrix a = input.matrix();
  Matrix v = Matrix::identity(n);
  const double scale = a.frobenius_norm();

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
  };

  bool converged = false;
  for (int sweep = 0; sweep <= kMaxSweeps; ++sweep) {
    if (off_norm() <= kOffDiagonalTolerance * scale) {
      converged = true;
      break;
    }
    if (sweep == kMaxSweeps) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // a <- J^T a J with J = [[c, s], [-s, c]] in the (p, q) plane.
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  if (!converged) {
    throw NoConvergence("eigh: Jacobi sweeps did not converge within " + std::to_string(kMaxSweeps) +
                        " sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });

  EigenDecomposition out{Matrix(n, n), Vector(n)};
  for (std::size_t c = 0; c < n; ++c) {
    out.values[c] = a(order[c], order[c]);
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, c) = v(r, order[c]);
  }
  return out;
}

double lambda_min(const SymMatrix& a) { return eigh(a).values.back(); }
double lambda_max(const SymMatrix& a) { return eigh(a).values.front(); }

namespace {

SymMatrix reconstruct(const EigenDecomposition& e, const Vector& fvals) {
  const std::size_t n = fvals.size();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += e.vectors(i, k) * fvals[k] * e.vectors(j, k);
      m(i, j) = s;
      m(j, i) = s;
    }
  return SymMatrix(m);
}

}  // namespace

SymMatrix apply_function(const SymMatrix& a, const std::function<double(double)>& f) {
  const EigenDecomposition e = eigh(a);
  Vector fv(e.values.size());
  for (std::size_t i = 0; i < fv.size(); ++i) {
    fv[i] = f(e.values[i]);
    if (!std::isfinite(fv[i])) {
      throw DomainError("apply_function: f is not finite at eigenvalue " + std::to_string(e.values[i]));
    }
  }
  return reconstruct(e, fv);
}

SpectralBounds::SpectralBounds(double m_, double M_) : m(m_), M(M_) {
  if (!(std::isfinite(m) && std::isfinite(M) && m > 0.0 && m <= M)) {
    throw InputError("spectral bounds must satisfy 0 < m <= M (got m=" + std::to_string(m) +
                     ", M=" + std::to_string(M) + ")");
  }
}

SpdMatrix::SpdMatrix(SymMatrix a) : a_(std::move(a)) {
  const EigenDecomposition e = eigh(a_);
  lmax_ = e.values.front();
  lmin_ = e.values.back();
  if (!(lmin_ > 0.0)) {
    throw NotPositiveDefinite("matrix is not positive definite (smallest eigenvalue " + std::to_string(lmin_) +
                              ")");
  }
}

SpdMatrix power(const SpdMatrix& a, double p) {
  if (p == 0.0) return SpdMatrix(SymMatrix::identity(a.dim()));
  if (p == 1.0) return a;
  const bool fractional_or_negative = p < 0.0 || std::floor(p) != p;
  if (fractional_or_negative && !(a.lambda_min() > kConditioningFloor * a.lambda_max())) {
    throw IllConditioned("power: lambda_min/lambda_max below conditioning floor for p=" + std::to_string(p));
  }
  return SpdMatrix(apply_function(a.sym(), [p](double x) { return std::pow(x, p); }));
}

SpdMatrix inverse(const SpdMatrix& a) { return power(a, -1.0); }
SpdMatrix sqrt(const SpdMatrix& a) { return power(a, 0.5); }

SymMatrix psd_power(const SymMatrix& a, double p, double tol_rel) {
  if (!(p > 0.0)) throw InputError("psd_power: p must be positive");
  const EigenDecomposition e = eigh(a);
  const double floor = -tol_rel * std::max(1.0, std::abs(e.values.front()));
  Vector fv(e.values.size());
  for (std::size_t i = 0; i < fv.size(); ++i) {
    double x = e.values[i];
    if (x < floor) {
      throw NotPositiveDefinite("psd_power: matrix has eigenvalue " + std::to_string(x));
    }
    fv[i] = std::pow(std::max(x, 0.0), p);
  }
  return reconstruct(e, fv);
}

double operator_norm(const SymMatrix& a) {
  const EigenDecomposition e = eigh(a);
  return std::max(std::abs(e.values.front()), std::abs(e.values.back()));
}

double spectral_norm(const Matrix& x) {
  if (x.rows() == 0 || x.cols() == 0) return 0.0;
  const double l = lambda_max(SymMatrix(x.transpose() * x));
  return std::sqrt(std::max(l, 0.0));
}

double TolerancePolicy::threshold(double scale) const {
  if (abs) return *abs;
  return rel * std::max(1.0, scale);
}

OrderResult loewner_leq(const SymMatrix& a, const SymMatrix& b, const TolerancePolicy& tol) {
  if (a.dim() != b.dim()) throw DimensionMismatch("loewner_leq: dimensions differ");
  const double gap = lambda_min(b - a);
  const double t = tol.threshold(std::max(operator_norm(a), operator_norm(b)));
  return {gap >= -t, gap, t};
}

bool block_norm_check(const Matrix& x, double t, const TolerancePolicy& tol) {
  const std::size_t r = x.rows();
  const std::size_t c = x.cols();
  Matrix blk(r + c, r + c);
  for (std::size_t i = 0; i < r; ++i) blk(i, i) = t;
  for (std::size_t j = 0; j < c; ++j) blk(r + j, r + j) = t;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      blk(i, r + j) = x(i, j);
      blk(r + j, i) = x(i, j);
    }
  return lambda_min(SymMatrix(blk)) >= -tol.threshold(t);
}

}  // namespace opineq
