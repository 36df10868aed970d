#include "opineq/means.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace opineq {

namespace {

void require_same_dim(const SpdMatrix& a, const SpdMatrix& b, const char* what) {
  if (a.dim() != b.dim()) throw DimensionMismatch(std::string(what) + ": dimensions differ");
}

// Kubo-Ando form A^{1/2} f(A^{-1/2} B A^{-1/2}) A^{1/2}.
SpdMatrix kubo_ando(const SpdMatrix& a, const SpdMatrix& b, const std::function<double(double)>& f) {
  const SpdMatrix half = sqrt(a);
  const SpdMatrix inv_half = power(a, -0.5);
  const SymMatrix c = sandwich(inv_half, b);
  return SpdMatrix(sandwich(half, apply_function(c, f)));
}

}  // namespace

void validate_weight(double nu) {
  if (!(nu >= 0.0 && nu <= 1.0)) throw InputError("weight nu must lie in [0, 1]");
}

MeanDescriptor::MeanDescriptor(MeanKind kind, double nu, double t) : kind_(kind), nu_(nu), t_(t) {
  validate_weight(nu);
  if (kind == MeanKind::power && !(t >= -1.0 && t <= 1.0 && t != 0.0)) {
    throw InputError("power mean exponent t must lie in [-1, 1] and be nonzero");
  }
}

MeanDescriptor MeanDescriptor::arithmetic(double nu) { return {MeanKind::arithmetic, nu, 1.0}; }
MeanDescriptor MeanDescriptor::geometric(double nu) { return {MeanKind::geometric, nu, 0.0}; }
MeanDescriptor MeanDescriptor::harmonic(double nu) { return {MeanKind::harmonic, nu, -1.0}; }
MeanDescriptor MeanDescriptor::power(double nu, double t) { return {MeanKind::power, nu, t}; }

double MeanDescriptor::r() const { return std::min(nu_, 1.0 - nu_); }

MeanDescriptor MeanDescriptor::with_nu(double nu) const { return {kind_, nu, t_}; }

std::string MeanDescriptor::name() const {
  switch (kind_) {
    case MeanKind::arithmetic:
      return "arithmetic";
    case MeanKind::geometric:
      return "geometric";
    case MeanKind::harmonic:
      return "harmonic";
    case MeanKind::power: {
      std::ostringstream os;
      os << "power(" << t_ << ")";
      return os.str();
    }
  }
  return "unknown";
}

SpdMatrix MeanDescriptor::apply(const SpdMatrix& a, const SpdMatrix& b) const {
  switch (kind_) {
    case MeanKind::arithmetic:
      return arithmetic_mean(a, b, nu_);
    case MeanKind::geometric:
      return geometric_mean(a, b, nu_);
    case MeanKind::harmonic:
      return harmonic_mean(a, b, nu_);
    case MeanKind::power:
      return power_mean(a, b, nu_, t_);
  }
  throw InputError("unknown mean kind");
}

double MeanDescriptor::apply(double a, double b) const {
  switch (kind_) {
    case MeanKind::arithmetic:
      return (1.0 - nu_) * a + nu_ * b;
    case MeanKind::geometric:
      return std::pow(a, 1.0 - nu_) * std::pow(b, nu_);
    case MeanKind::harmonic:
      return 1.0 / ((1.0 - nu_) / a + nu_ / b);
    case MeanKind::power:
      return std::pow((1.0 - nu_) * std::pow(a, t_) + nu_ * std::pow(b, t_), 1.0 / t_);
  }
  throw InputError("unknown mean kind");
}

MeanDescriptor parse_mean(const std::string& kind, double nu, double t) {
  if (kind == "arithmetic") return MeanDescriptor::arithmetic(nu);
  if (kind == "geometric") return MeanDescriptor::geometric(nu);
  if (kind == "harmonic") return MeanDescriptor::harmonic(nu);
  if (kind == "power") return MeanDescriptor::power(nu, t);
  throw InputError("unknown mean kind '" + kind + "'");
}

SpdMatrix arithmetic_mean(const SpdMatrix& a, const SpdMatrix& b, double nu) {
  require_same_dim(a, b, "arithmetic_mean");
  validate_weight(nu);
  if (nu == 0.0) return a;
  if (nu == 1.0) return b;
  return SpdMatrix((1.0 - nu) * a.sym() + nu * b.sym());
}

SpdMatrix geometric_mean(const SpdMatrix& a, const SpdMatrix& b, double nu) {
  require_same_dim(a, b, "geometric_mean");
  validate_weight(nu);
  if (nu == 0.0) return a;
  if (nu == 1.0) return b;
  return kubo_ando(a, b, [nu](double x) { return std::pow(x, nu); });
}

SpdMatrix harmonic_mean(const SpdMatrix& a, const SpdMatrix& b, double nu) {
  require_same_dim(a, b, "harmonic_mean");
  validate_weight(nu);
  if (nu == 0.0) return a;
  if (nu == 1.0) return b;
  return inverse(SpdMatrix((1.0 - nu) * inverse(a).sym() + nu * inverse(b).sym()));
}

SpdMatrix power_mean(const SpdMatrix& a, const SpdMatrix& b, double nu, double t) {
  require_same_dim(a, b, "power_mean");
  validate_weight(nu);
  if (!(t >= -1.0 && t <= 1.0 && t != 0.0)) {
    throw InputError("power mean exponent t must lie in [-1, 1] and be nonzero");
  }
  if (nu == 0.0) return a;
  if (nu == 1.0) return b;
  return kubo_ando(a, b, [nu, t](double x) { return std::pow((1.0 - nu) + nu * std::pow(x, t), 1.0 / t); });
}

SymMatrix inverse_amgm_defect(const SpdMatrix& a, const SpdMatrix& b) {
  require_same_dim(a, b, "inverse_amgm_defect");
  const SpdMatrix ai = inverse(a);
  const SpdMatrix bi = inverse(b);
  return arithmetic_mean(ai, bi, 0.5).sym() - geometric_mean(ai, bi, 0.5).sym();
}

SymMatrix refinement_term(const SpdMatrix& a, const SpdMatrix& b, double nu, const SpectralBounds& bounds) {
  validate_weight(nu);
  const double r = std::min(nu, 1.0 - nu);
  if (r == 0.0) return SymMatrix::zero(a.dim());
  return (2.0 * r * bounds.M * bounds.m) * inverse_amgm_defect(a, b);
}

}  // namespace opineq
