#pragma once

#include <string>

#include "opineq/linalg.hpp"

namespace opineq {

enum class MeanKind { arithmetic, geometric, harmonic, power };

/// A weighted two-variable operator mean. Power means carry an exponent
/// t in [-1, 1], t != 0; t = 1 is the arithmetic mean and t = -1 the harmonic.
class MeanDescriptor {
 public:
  static MeanDescriptor arithmetic(double nu);
  static MeanDescriptor geometric(double nu);
  static MeanDescriptor harmonic(double nu);
  static MeanDescriptor power(double nu, double t);

  MeanKind kind() const { return kind_; }
  double nu() const { return nu_; }
  double t() const { return t_; }
  /// min(nu, 1 - nu)
  double r() const;

  /// Same kind (and exponent) with a different weight.
  MeanDescriptor with_nu(double nu) const;

  /// "arithmetic", "geometric", "harmonic" or "power(t)".
  std::string name() const;

  SpdMatrix apply(const SpdMatrix& a, const SpdMatrix& b) const;
  /// The scalar mean of a, b > 0.
  double apply(double a, double b) const;

 private:
  MeanDescriptor(MeanKind kind, double nu, double t);

  MeanKind kind_;
  double nu_;
  double t_;
};

/// Parses "arithmetic" | "geometric" | "harmonic" | "power" (t required for power).
MeanDescriptor parse_mean(const std::string& kind, double nu, double t = 0.0);

/// (1 - nu) A + nu B.
SpdMatrix arithmetic_mean(const SpdMatrix& a, const SpdMatrix& b, double nu);
/// A^{1/2} (A^{-1/2} B A^{-1/2})^nu A^{1/2}.
SpdMatrix geometric_mean(const SpdMatrix& a, const SpdMatrix& b, double nu);
/// ((1 - nu) A^{-1} + nu B^{-1})^{-1}.
SpdMatrix harmonic_mean(const SpdMatrix& a, const SpdMatrix& b, double nu);
/// A^{1/2} ((1 - nu) I + nu (A^{-1/2} B A^{-1/2})^t)^{1/t} A^{1/2}.
SpdMatrix power_mean(const SpdMatrix& a, const SpdMatrix& b, double nu, double t);

/// A^{-1} nabla B^{-1} - A^{-1} sharp B^{-1} (unweighted means). Positive
/// semidefinite; zero when A = B.
SymMatrix inverse_amgm_defect(const SpdMatrix& a, const SpdMatrix& b);

/// 2 r M m (A^{-1} nabla B^{-1} - A^{-1} sharp B^{-1}) with r = min(nu, 1 - nu).
SymMatrix refinement_term(const SpdMatrix& a, const SpdMatrix& b, double nu, const SpectralBounds& bounds);

/// Throws InputError unless 0 <= nu <= 1.
void validate_weight(double nu);

}  // namespace opineq
