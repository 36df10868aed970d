#pragma once

// Catalog of reverse AM-GM type operator inequalities with numerical verifiers.
//
// Each verifier evaluates both sides of one inequality on concrete inputs,
// computes the Loewner gap lambda_min(RHS - LHS) (or RHS - LHS for scalar- and
// norm-valued statements) and decides `holds` under the tolerance policy.
// Hypotheses (spectral bounds, exponent ranges) are verified first; a
// violation raises HypothesisViolation instead of producing a report.

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "opineq/linalg.hpp"
#include "opineq/means.hpp"
#include "opineq/posmaps.hpp"

namespace opineq {

enum class InequalityId {
  AMGM,
  LIN_REVERSE,
  LIN_SQ,
  LIN_SQ_MAPS,
  P_LE_2,
  P_LE_2_MAPS,
  FU_HE,
  FU_HE_MAPS,
  HOA_FU,
  HOA_FU_MAPS,
  CHOI,
  LEMMA_2_1,
  LEMMA_2_2,
  LEMMA_2_3,
  LEMMA_2_4,
  PROP_2_5,
  SCALAR_KM,
  THM_2_7_A,
  THM_2_7_B,
  EQ_2_4,
  EQ_2_5,
  EQ_2_6,
  REMARK_2_8_A,
  REMARK_2_8_B,
  BASIC_BOUND,
  COR_2_11,
  COR_2_12,
  POLYA_SZEGO,
  KANTOROVICH,
  THM_2_13_A,
  THM_2_13_B,
  EQ_2_11,
  EQ_2_12,
  COR_2_14,
  PROP_2_15,
};

/// Every catalog id in declaration order.
std::span<const InequalityId> all_inequality_ids();
std::string_view to_string(InequalityId id);
/// Throws InputError for an unknown name.
InequalityId parse_inequality_id(std::string_view name);
/// Short human-readable statement of the inequality.
std::string_view describe(InequalityId id);

/// Which constant to use for alpha: the 4^{2/p} branch used in the theorem
/// statements, or the 4^p branch printed in the abstract.
enum class AlphaVariant { body, abstract };

AlphaVariant parse_alpha_variant(std::string_view name);
std::string_view to_string(AlphaVariant v);

/// (M + m)^2 / (4 M m).
double kantorovich_constant(const SpectralBounds& bounds);

/// The two candidates {(M+m)^2/(4Mm), (M+m)^2/(4^{2/p} Mm)} (or 4^p for the
/// abstract variant). Throws InputError for p <= 0.
std::array<double, 2> alpha_branches(const SpectralBounds& bounds, double p, AlphaVariant variant = AlphaVariant::body);
double alpha(const SpectralBounds& bounds, double p, AlphaVariant variant = AlphaVariant::body);

/// Two-sided bounds m1^2 <= A <= M1^2 and m2^2 <= B <= M2^2 for the
/// Polya-Szego family, with derived ratio bounds m = m2 / M1 and M = M2 / m1
/// on (A^{-1/2} B A^{-1/2})^{1/2}.
struct PolyaSzegoBounds {
  double m1, M1, m2, M2;

  /// From eigenvalue bounds of A and B (square roots are taken here).
  static PolyaSzegoBounds from_spectra(const SpectralBounds& a, const SpectralBounds& b);
  PolyaSzegoBounds(double m1, double M1, double m2, double M2);

  double m() const { return m2 / M1; }
  double M() const { return M2 / m1; }
  /// (M + m) / (2 sqrt(M m)).
  double constant() const;
};

struct VerifierParams {
  double nu = 0.5;
  double p = 1.0;
  SpectralBounds bounds{1.0, 1.0};
  /// Eigenvalue bounds for B in the Polya-Szego family; defaults to `bounds`.
  std::optional<SpectralBounds> bounds_b;
  MeanDescriptor sigma = MeanDescriptor::arithmetic(0.5);
  MeanDescriptor tau = MeanDescriptor::geometric(0.5);
  /// Defaults to the identity on the input dimension.
  std::optional<PositiveUnitalMap> map;
  AlphaVariant alpha_variant = AlphaVariant::body;
  /// Multiplies alpha before use. Anything other than 1 is fault injection.
  double alpha_scale = 1.0;
  TolerancePolicy tolerance{};
};

struct CheckInputs {
  std::optional<SpdMatrix> a;
  std::optional<SpdMatrix> b;
  /// Scalars for SCALAR_KM; taken from 1x1 a, b when absent.
  std::optional<double> scalar_a;
  std::optional<double> scalar_b;
  /// Unit vector for PROP_2_15.
  std::optional<Vector> x;
  /// Operator tuples for COR_2_14.
  std::vector<SpdMatrix> blocks_a;
  std::vector<SpdMatrix> blocks_b;
  /// The constant in LEMMA_2_3 (A <= c B iff ||A^{1/2} B^{-1/2}|| <= c^{1/2}).
  std::optional<double> lemma_constant;
};

using ReportValue = std::variant<double, SymMatrix>;

struct InequalityReport {
  InequalityId id;
  ReportValue lhs;
  ReportValue rhs;
  double gap;
  std::optional<double> alpha_used;
  bool holds;
  double tolerance;
  /// Scale the tolerance was computed from: max(1, |lhs|, |rhs|).
  double scale;
  std::map<std::string, double> params;
};

/// Evaluates one catalog inequality. Throws HypothesisViolation when the
/// inputs fall outside its hypotheses and InputError when required inputs are
/// missing.
InequalityReport check(InequalityId id, const VerifierParams& params, const CheckInputs& inputs);

/// Throws HypothesisViolation naming `what` unless m I <= A <= M I.
void require_within(const SymMatrix& a, const SpectralBounds& bounds, const TolerancePolicy& tol,
                    const std::string& what);

}  // namespace opineq
