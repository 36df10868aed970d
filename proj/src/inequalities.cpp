#include "opineq/inequalities.hpp"

#include <algorithm>
#include <cmath>

namespace opineq {

namespace {

struct CatalogEntry {
  InequalityId id;
  std::string_view name;
  std::string_view statement;
};

constexpr CatalogEntry kCatalog[] = {
    {InequalityId::AMGM, "AMGM", "A # B <= (A + B)/2"},
    {InequalityId::LIN_REVERSE, "LIN_REVERSE", "Phi((A+B)/2) <= K Phi(A # B)"},
    {InequalityId::LIN_SQ, "LIN_SQ", "Phi^2((A+B)/2) <= K^2 Phi^2(A # B)"},
    {InequalityId::LIN_SQ_MAPS, "LIN_SQ_MAPS", "Phi^2((A+B)/2) <= K^2 (Phi(A) # Phi(B))^2"},
    {InequalityId::P_LE_2, "P_LE_2", "Phi^p((A+B)/2) <= K^p Phi^p(A # B), 0 < p <= 2"},
    {InequalityId::P_LE_2_MAPS, "P_LE_2_MAPS", "Phi^p((A+B)/2) <= K^p (Phi(A) # Phi(B))^p, 0 < p <= 2"},
    {InequalityId::FU_HE, "FU_HE", "Phi^p((A+B)/2) <= ((M+m)^2/(4^{2/p} Mm))^p Phi^p(A # B), p > 2"},
    {InequalityId::FU_HE_MAPS, "FU_HE_MAPS",
     "Phi^p((A+B)/2) <= ((M+m)^2/(4^{2/p} Mm))^p (Phi(A) # Phi(B))^p, p > 2"},
    {InequalityId::HOA_FU, "HOA_FU", "Phi^p(A sigma B) <= alpha^p Phi^p(A tau B)"},
    {InequalityId::HOA_FU_MAPS, "HOA_FU_MAPS", "Phi^p(A sigma B) <= alpha^p (Phi(A) tau Phi(B))^p"},
    {InequalityId::CHOI, "CHOI", "Phi(A)^{-1} <= Phi(A^{-1})"},
    {InequalityId::LEMMA_2_1, "LEMMA_2_1", "||AB|| <= ||A+B||^2 / 4"},
    {InequalityId::LEMMA_2_2, "LEMMA_2_2", "||A^p + B^p|| <= ||(A+B)^p||, p > 1"},
    {InequalityId::LEMMA_2_3, "LEMMA_2_3", "A <= cB iff ||A^{1/2} B^{-1/2}|| <= c^{1/2}"},
    {InequalityId::LEMMA_2_4, "LEMMA_2_4", "Phi(A sigma B) + Mm Phi^{-1}(A tau B) <= M + m"},
    {InequalityId::PROP_2_5, "PROP_2_5",
     "Phi^p(A sigma B) Phi^{-p}(A tau B) + Phi^{-p}(A tau B) Phi^p(A sigma B) <= 2 alpha'^p, "
     "alpha' = max{K, (M+m)^2/(4^{1/p} Mm)}"},
    {InequalityId::SCALAR_KM, "SCALAR_KM", "a^{1-nu} b^nu + r (sqrt a - sqrt b)^2 <= (1-nu) a + nu b"},
    {InequalityId::THM_2_7_A, "THM_2_7_A", "Phi^p(A nabla_nu B + 2rMm (A^-1 nabla B^-1 - A^-1 # B^-1)) <= alpha^p Phi^p(A #_nu B)"},
    {InequalityId::THM_2_7_B, "THM_2_7_B",
     "Phi^p(A nabla_nu B + 2rMm (A^-1 nabla B^-1 - A^-1 # B^-1)) <= alpha^p (Phi(A) #_nu Phi(B))^p"},
    {InequalityId::EQ_2_4, "EQ_2_4", "Phi(A nabla_nu B) + Mm Phi((1-nu) A^-1 + nu B^-1) <= M + m"},
    {InequalityId::EQ_2_5, "EQ_2_5", "A^-1 #_nu B^-1 + 2r (A^-1 nabla B^-1 - A^-1 # B^-1) <= (1-nu) A^-1 + nu B^-1"},
    {InequalityId::EQ_2_6, "EQ_2_6", "||Phi(A nabla_nu B + refinement) Phi^{-1}(A #_nu B)|| <= K"},
    {InequalityId::REMARK_2_8_A, "REMARK_2_8_A",
     "Phi^p(A nabla_nu B) <= (Phi(A nabla_nu B) + 2rMm Phi(A^-1 nabla B^-1 - A^-1 # B^-1))^p, 0 < p <= 1"},
    {InequalityId::REMARK_2_8_B, "REMARK_2_8_B",
     "||Phi^p(A nabla_nu B)|| <= ||Phi^p(A nabla_nu B) + (2rMm)^p Phi^p(D)|| <= ||Phi^p(A nabla_nu B + 2rMm D)||, p >= 1"},
    {InequalityId::BASIC_BOUND, "BASIC_BOUND", "A + Mm A^-1 <= M + m"},
    {InequalityId::COR_2_11, "COR_2_11",
     "Phi^p((A+B)/2 + Mm (A^-1 nabla B^-1 - A^-1 # B^-1)) <= alpha^p Phi^p(A # B) and <= alpha^p (Phi(A) # Phi(B))^p"},
    {InequalityId::COR_2_12, "COR_2_12", "((A+B)/2 + Mm (A^-1 nabla B^-1 - A^-1 # B^-1))^p <= alpha^p (A # B)^p"},
    {InequalityId::POLYA_SZEGO, "POLYA_SZEGO", "Phi(A) # Phi(B) <= (M+m)/(2 sqrt(Mm)) Phi(A # B)"},
    {InequalityId::KANTOROVICH, "KANTOROVICH", "Phi(A) # Phi(A^-1) <= (M^2+m^2)/(2mM), m^2 <= A <= M^2"},
    {InequalityId::THM_2_13_A, "THM_2_13_A",
     "Phi(A)#Phi(B) + (sqrt(Mm) Phi(A) + Phi(B)/sqrt(Mm) - 2 Phi(A)#Phi(B))/2 <= (M+m)/(2 sqrt(Mm)) Phi(A # B)"},
    {InequalityId::THM_2_13_B, "THM_2_13_B",
     "Phi(A)#Phi(A^-1) + (Phi(A)/(Mm) + Mm Phi(A^-1) - 2 Phi(A)#Phi(A^-1))/2 <= (M^2+m^2)/(2mM), m^2 <= A <= M^2"},
    {InequalityId::EQ_2_11, "EQ_2_11", "Mm Phi(A) + Phi(B) <= (M+m) Phi(A # B)"},
    {InequalityId::EQ_2_12, "EQ_2_12",
     "sqrt(Mm) Phi(A)#Phi(B) + (Mm Phi(A) + Phi(B) - 2 sqrt(Mm) Phi(A)#Phi(B))/2 <= (Mm Phi(A) + Phi(B))/2"},
    {InequalityId::COR_2_14, "COR_2_14",
     "(sum A_j # sum B_j) + (sqrt(Mm) sum A_j + sum B_j/sqrt(Mm) - 2 (sum A_j # sum B_j))/2 <= (M+m)/(2 sqrt(Mm)) sum A_j # B_j"},
    {InequalityId::PROP_2_15, "PROP_2_15",
     "<Ax,x>^{1/2}<A^-1x,x>^{1/2} + (<Ax,x>^{1/2}/(Mm)^{1/4} - (Mm)^{1/4}<A^-1x,x>^{1/2})^2/2 <= (M+m)/(2 sqrt(Mm)) <x,x>^2"},
};

constexpr std::size_t kCatalogSize = sizeof(kCatalog) / sizeof(kCatalog[0]);

const std::array<InequalityId, kCatalogSize> kAllIds = [] {
  std::array<InequalityId, kCatalogSize> ids{};
  for (std::size_t i = 0; i < kCatalogSize; ++i) ids[i] = kCatalog[i].id;
  return ids;
}();

const CatalogEntry& entry(InequalityId id) {
  const auto idx = static_cast<std::size_t>(id);
  if (idx >= kCatalogSize || kCatalog[idx].id != id) throw InputError("unknown inequality id");
  return kCatalog[idx];
}

double norm_of(const ReportValue& v) {
  if (const auto* d = std::get_if<double>(&v)) return std::abs(*d);
  return operator_norm(std::get<SymMatrix>(v));
}

InequalityReport make_report(InequalityId id, ReportValue lhs, ReportValue rhs, double gap,
                             const TolerancePolicy& tol) {
  const double scale = std::max({1.0, norm_of(lhs), norm_of(rhs)});
  const double t = tol.threshold(scale);
  return InequalityReport{id, std::move(lhs), std::move(rhs), gap, std::nullopt, gap >= -t, t, scale, {}};
}

InequalityReport matrix_report(InequalityId id, const SymMatrix& lhs, const SymMatrix& rhs,
                               const TolerancePolicy& tol) {
  if (lhs.dim() != rhs.dim()) throw DimensionMismatch("inequality sides have different dimensions");
  const double gap = lambda_min(rhs - lhs);
  return make_report(id, lhs, rhs, gap, tol);
}

InequalityReport scalar_report(InequalityId id, double lhs, double rhs, const TolerancePolicy& tol) {
  return make_report(id, lhs, rhs, rhs - lhs, tol);
}

/// Both statements must hold; the report carries the binding one.
InequalityReport both(InequalityReport first, InequalityReport second) {
  if (first.holds != second.holds) return first.holds ? second : first;
  return first.gap / first.scale <= second.gap / second.scale ? first : second;
}

SymMatrix scaled_identity(std::size_t n, double c) { return c * SymMatrix::identity(n); }

class Checker {
 public:
  Checker(InequalityId id, const VerifierParams& params, const CheckInputs& inputs)
      : id_(id), p_(params), in_(inputs) {}

  InequalityReport run();

 private:
  const SpdMatrix& A() const {
    if (!in_.a) throw InputError(std::string(entry(id_).name) + " requires matrix A");
    return *in_.a;
  }
  const SpdMatrix& B() const {
    if (!in_.b) throw InputError(std::string(entry(id_).name) + " requires matrix B");
    if (in_.a && in_.a->dim() != in_.b->dim()) throw DimensionMismatch("A and B have different dimensions");
    return *in_.b;
  }

  const PositiveUnitalMap& phi() {
    if (!phi_) {
      const std::size_t n = A().dim();
      phi_ = p_.map ? *p_.map : PositiveUnitalMap::identity(n);
      if (phi_->input_dim() != n) {
        throw DimensionMismatch("map input dimension " + std::to_string(phi_->input_dim()) +
                                " does not match matrix dimension " + std::to_string(n));
      }
    }
    return *phi_;
  }

  SpdMatrix Phi(const SymMatrix& x) { return SpdMatrix(phi()(x)); }
  SymMatrix PhiPow(const SymMatrix& x, double p) { return power(Phi(x), p).sym(); }

  double Mm() const { return p_.bounds.M * p_.bounds.m; }
  double MplusM() const { return p_.bounds.M + p_.bounds.m; }
  double K() const { return kantorovich_constant(p_.bounds); }
  double scaled_alpha(double p) const { return p_.alpha_scale * alpha(p_.bounds, p, p_.alpha_variant); }

  void require_ab_within_bounds() {
    require_within(A(), p_.bounds, p_.tolerance, "A");
    require_within(B(), p_.bounds, p_.tolerance, "B");
  }
  void require_p_positive() const {
    if (!(p_.p > 0.0)) throw HypothesisViolation("exponent p must be positive");
  }
  void require_p(bool ok, const char* range) const {
    require_p_positive();
    if (!ok) {
      throw HypothesisViolation(std::string(entry(id_).name) + " requires " + range + " (got p=" +
                                std::to_string(p_.p) + ")");
    }
  }
  void require_shared_weight() const {
    if (p_.sigma.nu() != p_.tau.nu()) throw HypothesisViolation("means sigma and tau must share the weight nu");
  }

  PolyaSzegoBounds ps_bounds() const {
    return PolyaSzegoBounds::from_spectra(p_.bounds, p_.bounds_b.value_or(p_.bounds));
  }
  void require_ps_within() {
    require_within(A(), p_.bounds, p_.tolerance, "A");
    require_within(B(), p_.bounds_b.value_or(p_.bounds), p_.tolerance, "B");
  }

  SymMatrix refined(double nu) { return arithmetic_mean(A(), B(), nu).sym() + refinement_term(A(), B(), nu, p_.bounds); }

  InequalityReport with_alpha(InequalityReport r, double a) {
    r.alpha_used = a;
    return r;
  }

  InequalityId id_;
  const VerifierParams& p_;
  const CheckInputs& in_;
  std::optional<PositiveUnitalMap> phi_;
};

InequalityReport Checker::run() {
  const TolerancePolicy& tol = p_.tolerance;
  const double p = p_.p;
  const double nu = p_.nu;
  validate_weight(nu);
  const double r = std::min(nu, 1.0 - nu);

  switch (id_) {
    case InequalityId::AMGM: {
      return matrix_report(id_, geometric_mean(A(), B(), 0.5), arithmetic_mean(A(), B(), 0.5), tol);
    }
    case InequalityId::LIN_REVERSE: {
      require_ab_within_bounds();
      const SymMatrix lhs = Phi(arithmetic_mean(A(), B(), 0.5));
      const SymMatrix rhs = K() * Phi(geometric_mean(A(), B(), 0.5)).sym();
      return with_alpha(matrix_report(id_, lhs, rhs, tol), K());
    }
    case InequalityId::LIN_SQ:
    case InequalityId::LIN_SQ_MAPS:
    case InequalityId::P_LE_2:
    case InequalityId::P_LE_2_MAPS:
    case InequalityId::FU_HE:
    case InequalityId::FU_HE_MAPS: {
      double q = 2.0;
      double c = K();
      if (id_ == InequalityId::P_LE_2 || id_ == InequalityId::P_LE_2_MAPS) {
        require_p(p <= 2.0, "0 < p <= 2");
        q = p;
      } else if (id_ == InequalityId::FU_HE || id_ == InequalityId::FU_HE_MAPS) {
        require_p(p > 2.0, "p > 2");
        q = p;
        c = MplusM() * MplusM() / (std::pow(4.0, 2.0 / p) * Mm());
      }
      require_ab_within_bounds();
      const bool maps = id_ == InequalityId::LIN_SQ_MAPS || id_ == InequalityId::P_LE_2_MAPS ||
                        id_ == InequalityId::FU_HE_MAPS;
      const SymMatrix lhs = PhiPow(arithmetic_mean(A(), B(), 0.5), q);
      const SymMatrix inner = maps ? geometric_mean(Phi(A()), Phi(B()), 0.5).sym()
                                   : phi()(geometric_mean(A(), B(), 0.5));
      const SymMatrix rhs = std::pow(c, q) * power(SpdMatrix(inner), q).sym();
      return with_alpha(matrix_report(id_, lhs, rhs, tol), c);
    }
    case InequalityId::HOA_FU:
    case InequalityId::HOA_FU_MAPS: {
      require_p_positive();
      require_shared_weight();
      require_ab_within_bounds();
      const double a = scaled_alpha(p);
      const SymMatrix lhs = PhiPow(p_.sigma.apply(A(), B()), p);
      const SymMatrix inner = id_ == InequalityId::HOA_FU ? phi()(p_.tau.apply(A(), B()))
                                                          : p_.tau.apply(Phi(A()), Phi(B())).sym();
      const SymMatrix rhs = std::pow(a, p) * power(SpdMatrix(inner), p).sym();
      return with_alpha(matrix_report(id_, lhs, rhs, tol), a);
    }
    case InequalityId::CHOI: {
      return matrix_report(id_, inverse(Phi(A())), phi()(inverse(A())), tol);
    }
    case InequalityId::LEMMA_2_1: {
      const double lhs = spectral_norm(A() * B());
      const double s = operator_norm(A().sym() + B().sym());
      return scalar_report(id_, lhs, 0.25 * s * s, tol);
    }
    case InequalityId::LEMMA_2_2: {
      require_p(p > 1.0, "p > 1");
      const double lhs = operator_norm(power(A(), p).sym() + power(B(), p).sym());
      const double rhs = operator_norm(power(SpdMatrix(A().sym() + B().sym()), p).sym());
      return scalar_report(id_, lhs, rhs, tol);
    }
    case InequalityId::LEMMA_2_3: {
      if (!in_.lemma_constant || !(*in_.lemma_constant > 0.0)) {
        throw InputError("LEMMA_2_3 requires a positive constant c");
      }
      const double c = *in_.lemma_constant;
      const double order_gap = lambda_min(c * B().sym() - A().sym());
      const double norm = spectral_norm(sqrt(A()) * power(B(), -0.5));
      const double norm_gap = std::sqrt(c) - norm;
      // Continuous form of the two implications; both margins agree in sign
      // exactly when the equivalence holds.
      const double forward = std::max(-order_gap, norm_gap);
      const double backward = std::max(-norm_gap, order_gap);
      auto rep = make_report(id_, norm, std::sqrt(c), std::min(forward, backward), tol);
      rep.scale = std::max({1.0, c * B().lambda_max(), A().lambda_max()});
      rep.tolerance = tol.threshold(rep.scale);
      rep.holds = rep.gap >= -rep.tolerance;
      rep.params["c"] = c;
      rep.params["order_gap"] = order_gap;
      rep.params["norm_gap"] = norm_gap;
      return rep;
    }
    case InequalityId::LEMMA_2_4: {
      require_shared_weight();
      require_ab_within_bounds();
      const SymMatrix lhs = Phi(p_.sigma.apply(A(), B())).sym() + Mm() * inverse(Phi(p_.tau.apply(A(), B()))).sym();
      return matrix_report(id_, lhs, scaled_identity(lhs.dim(), MplusM()), tol);
    }
    case InequalityId::PROP_2_5: {
      require_p_positive();
      require_shared_weight();
      require_ab_within_bounds();
      // Operator-norm bound from the exponent-2p case of HOA_FU.
      const double a = scaled_alpha(2.0 * p);
      const SpdMatrix s_pow = power(Phi(p_.sigma.apply(A(), B())), p);
      const SpdMatrix t_neg = power(Phi(p_.tau.apply(A(), B())), -p);
      const SymMatrix lhs = 2.0 * SymMatrix(s_pow * t_neg);
      auto rep = matrix_report(id_, lhs, scaled_identity(lhs.dim(), 2.0 * std::pow(a, p)), tol);
      return with_alpha(std::move(rep), a);
    }
    case InequalityId::SCALAR_KM: {
      double a = 0.0;
      double b = 0.0;
      if (in_.scalar_a && in_.scalar_b) {
        a = *in_.scalar_a;
        b = *in_.scalar_b;
      } else if (in_.a && in_.b && in_.a->dim() == 1 && in_.b->dim() == 1) {
        a = (*in_.a)(0, 0);
        b = (*in_.b)(0, 0);
      } else {
        throw InputError("SCALAR_KM requires scalars a and b (or 1x1 matrices)");
      }
      if (!(a > 0.0 && b > 0.0)) throw HypothesisViolation("SCALAR_KM requires a, b > 0");
      const double d = std::sqrt(a) - std::sqrt(b);
      const double lhs = std::pow(a, 1.0 - nu) * std::pow(b, nu) + r * d * d;
      const double rhs = (1.0 - nu) * a + nu * b;
      // At nu = 1/2 the two sides are equal; compare absolutely.
      const TolerancePolicy t = nu == 0.5 ? TolerancePolicy::absolute(1e-12) : tol;
      auto rep = scalar_report(id_, lhs, rhs, t);
      rep.params["a"] = a;
      rep.params["b"] = b;
      return rep;
    }
    case InequalityId::THM_2_7_A:
    case InequalityId::THM_2_7_B: {
      require_p_positive();
      require_ab_within_bounds();
      const double a = scaled_alpha(p);
      const SymMatrix lhs = PhiPow(refined(nu), p);
      const SymMatrix inner = id_ == InequalityId::THM_2_7_A ? phi()(geometric_mean(A(), B(), nu))
                                                             : geometric_mean(Phi(A()), Phi(B()), nu).sym();
      const SymMatrix rhs = std::pow(a, p) * power(SpdMatrix(inner), p).sym();
      return with_alpha(matrix_report(id_, lhs, rhs, tol), a);
    }
    case InequalityId::EQ_2_4: {
      require_ab_within_bounds();
      const SymMatrix inv_mix = (1.0 - nu) * inverse(A()).sym() + nu * inverse(B()).sym();
      const SymMatrix lhs = Phi(arithmetic_mean(A(), B(), nu)).sym() + Mm() * phi()(inv_mix);
      return matrix_report(id_, lhs, scaled_identity(lhs.dim(), MplusM()), tol);
    }
    case InequalityId::EQ_2_5: {
      const SpdMatrix ai = inverse(A());
      const SpdMatrix bi = inverse(B());
      const SymMatrix lhs = geometric_mean(ai, bi, nu).sym() + (2.0 * r) * inverse_amgm_defect(A(), B());
      return matrix_report(id_, lhs, arithmetic_mean(ai, bi, nu), tol);
    }
    case InequalityId::EQ_2_6: {
      require_ab_within_bounds();
      const SpdMatrix left = Phi(refined(nu));
      const SpdMatrix right = inverse(Phi(geometric_mean(A(), B(), nu)));
      return with_alpha(scalar_report(id_, spectral_norm(left * right), K(), tol), K());
    }
    case InequalityId::REMARK_2_8_A: {
      require_p(p <= 1.0, "0 < p <= 1");
      require_ab_within_bounds();
      const SymMatrix base = phi()(arithmetic_mean(A(), B(), nu));
      const SymMatrix lhs = power(SpdMatrix(base), p).sym();
      const SymMatrix added = base + phi()(refinement_term(A(), B(), nu, p_.bounds));
      return matrix_report(id_, lhs, power(SpdMatrix(added), p).sym(), tol);
    }
    case InequalityId::REMARK_2_8_B: {
      require_p(p >= 1.0, "p >= 1");
      require_ab_within_bounds();
      const SymMatrix base_pow = PhiPow(arithmetic_mean(A(), B(), nu), p);
      const SymMatrix defect = phi()(inverse_amgm_defect(A(), B()));
      const double coeff = std::pow(2.0 * r * Mm(), p);
      const SymMatrix middle = coeff == 0.0 ? base_pow : base_pow + coeff * psd_power(defect, p);
      const double n0 = operator_norm(base_pow);
      const double n1 = operator_norm(middle);
      const double n2 = operator_norm(PhiPow(refined(nu), p));
      auto first = scalar_report(id_, n0, n1, tol);
      auto second = scalar_report(id_, n1, n2, tol);
      auto rep = both(first, second);
      rep.params["norm_base"] = n0;
      rep.params["norm_split"] = n1;
      rep.params["norm_refined"] = n2;
      return rep;
    }
    case InequalityId::BASIC_BOUND: {
      require_within(A(), p_.bounds, tol, "A");
      const SymMatrix lhs = A().sym() + Mm() * inverse(A()).sym();
      return matrix_report(id_, lhs, scaled_identity(lhs.dim(), MplusM()), tol);
    }
    case InequalityId::COR_2_11: {
      require_p_positive();
      require_ab_within_bounds();
      const double a = scaled_alpha(p);
      const SymMatrix lhs = PhiPow(refined(0.5), p);
      const SymMatrix rhs1 = std::pow(a, p) * PhiPow(geometric_mean(A(), B(), 0.5), p);
      const SymMatrix rhs2 = std::pow(a, p) * power(geometric_mean(Phi(A()), Phi(B()), 0.5), p).sym();
      return with_alpha(both(matrix_report(id_, lhs, rhs1, tol), matrix_report(id_, lhs, rhs2, tol)), a);
    }
    case InequalityId::COR_2_12: {
      require_p_positive();
      require_ab_within_bounds();
      const double c = p <= 2.0 ? K() : MplusM() * MplusM() / (std::pow(4.0, 2.0 / p) * Mm());
      const SymMatrix lhs = power(SpdMatrix(refined(0.5)), p).sym();
      const SymMatrix rhs = std::pow(c, p) * power(geometric_mean(A(), B(), 0.5), p).sym();
      return with_alpha(matrix_report(id_, lhs, rhs, tol), c);
    }
    case InequalityId::POLYA_SZEGO: {
      require_ps_within();
      const PolyaSzegoBounds ps = ps_bounds();
      const SymMatrix lhs = geometric_mean(Phi(A()), Phi(B()), 0.5);
      const SymMatrix rhs = ps.constant() * phi()(geometric_mean(A(), B(), 0.5));
      return with_alpha(matrix_report(id_, lhs, rhs, tol), ps.constant());
    }
    case InequalityId::KANTOROVICH:
    case InequalityId::THM_2_13_B: {
      require_within(A(), p_.bounds, tol, "A");
      const double m = std::sqrt(p_.bounds.m);
      const double M = std::sqrt(p_.bounds.M);
      const double c = (M * M + m * m) / (2.0 * m * M);
      const SpdMatrix pa = Phi(A());
      const SpdMatrix pai = Phi(inverse(A()));
      const SymMatrix g = geometric_mean(pa, pai, 0.5);
      SymMatrix lhs = g;
      if (id_ == InequalityId::THM_2_13_B) {
        const double mM = m * M;
        lhs = g + 0.5 * ((1.0 / mM) * pa.sym() + mM * pai.sym() - 2.0 * g);
      }
      return with_alpha(matrix_report(id_, lhs, scaled_identity(lhs.dim(), c), tol), c);
    }
    case InequalityId::THM_2_13_A: {
      require_ps_within();
      const PolyaSzegoBounds ps = ps_bounds();
      const double k = std::sqrt(ps.M() * ps.m());
      const SpdMatrix pa = Phi(A());
      const SpdMatrix pb = Phi(B());
      const SymMatrix g = geometric_mean(pa, pb, 0.5);
      const SymMatrix lhs = g + 0.5 * (k * pa.sym() + (1.0 / k) * pb.sym() - 2.0 * g);
      const SymMatrix rhs = ps.constant() * phi()(geometric_mean(A(), B(), 0.5));
      return with_alpha(matrix_report(id_, lhs, rhs, tol), ps.constant());
    }
    case InequalityId::EQ_2_11: {
      require_ps_within();
      const PolyaSzegoBounds ps = ps_bounds();
      const SymMatrix lhs = (ps.M() * ps.m()) * Phi(A()).sym() + Phi(B()).sym();
      const SymMatrix rhs = (ps.M() + ps.m()) * phi()(geometric_mean(A(), B(), 0.5));
      return matrix_report(id_, lhs, rhs, tol);
    }
    case InequalityId::EQ_2_12: {
      require_ps_within();
      const PolyaSzegoBounds ps = ps_bounds();
      const double mm = ps.M() * ps.m();
      const double k = std::sqrt(mm);
      const SymMatrix x = mm * Phi(A()).sym();
      const SymMatrix y = Phi(B()).sym();
      const SymMatrix g = geometric_mean(Phi(A()), Phi(B()), 0.5);
      const SymMatrix lhs = k * g + 0.5 * (x + y - (2.0 * k) * g);
      return matrix_report(id_, lhs, 0.5 * (x + y), tol);
    }
    case InequalityId::COR_2_14: {
      if (in_.blocks_a.empty() || in_.blocks_a.size() != in_.blocks_b.size()) {
        throw InputError("COR_2_14 requires equally many (at least one) operators A_j and B_j");
      }
      const std::size_t d = in_.blocks_a.front().dim();
      const SpectralBounds bb = p_.bounds_b.value_or(p_.bounds);
      SymMatrix sum_a = SymMatrix::zero(d);
      SymMatrix sum_b = SymMatrix::zero(d);
      SymMatrix sum_g = SymMatrix::zero(d);
      for (std::size_t j = 0; j < in_.blocks_a.size(); ++j) {
        const SpdMatrix& aj = in_.blocks_a[j];
        const SpdMatrix& bj = in_.blocks_b[j];
        if (aj.dim() != d || bj.dim() != d) throw DimensionMismatch("COR_2_14 operators must share a dimension");
        require_within(aj, p_.bounds, tol, "A_" + std::to_string(j + 1));
        require_within(bj, bb, tol, "B_" + std::to_string(j + 1));
        sum_a = sum_a + aj.sym();
        sum_b = sum_b + bj.sym();
        sum_g = sum_g + geometric_mean(aj, bj, 0.5).sym();
      }
      const PolyaSzegoBounds ps = ps_bounds();
      const double k = std::sqrt(ps.M() * ps.m());
      const SymMatrix g = geometric_mean(SpdMatrix(sum_a), SpdMatrix(sum_b), 0.5);
      const SymMatrix lhs = g + 0.5 * (k * sum_a + (1.0 / k) * sum_b - 2.0 * g);
      return with_alpha(matrix_report(id_, lhs, ps.constant() * sum_g, tol), ps.constant());
    }
    case InequalityId::PROP_2_15: {
      require_within(A(), p_.bounds, tol, "A");
      if (!in_.x) throw InputError("PROP_2_15 requires a vector x");
      const Vector& x = *in_.x;
      if (x.size() != A().dim()) throw DimensionMismatch("vector x does not match A");
      const double xx = dot(x, x);
      if (std::abs(std::sqrt(xx) - 1.0) > 1e-12) throw HypothesisViolation("PROP_2_15 requires a unit vector x");
      const double ax = dot(A().sym().matrix() * x, x);
      const double aix = dot(inverse(A()).sym().matrix() * x, x);
      const double s = std::pow(Mm(), 0.25);
      const double diff = std::sqrt(ax) / s - s * std::sqrt(aix);
      const double lhs = std::sqrt(ax) * std::sqrt(aix) + 0.5 * diff * diff;
      const double c = MplusM() / (2.0 * std::sqrt(Mm()));
      return with_alpha(scalar_report(id_, lhs, c * xx * xx, tol), c);
    }
  }
  throw InputError("unknown inequality id");
}

}  // namespace

std::span<const InequalityId> all_inequality_ids() { return kAllIds; }

std::string_view to_string(InequalityId id) { return entry(id).name; }

std::string_view describe(InequalityId id) { return entry(id).statement; }

InequalityId parse_inequality_id(std::string_view name) {
  for (const auto& e : kCatalog)
    if (e.name == name) return e.id;
  throw InputError("unknown inequality id '" + std::string(name) + "'");
}

AlphaVariant parse_alpha_variant(std::string_view name) {
  if (name == "body") return AlphaVariant::body;
  if (name == "abstract") return AlphaVariant::abstract;
  throw InputError("alpha variant must be 'body' or 'abstract'");
}

std::string_view to_string(AlphaVariant v) { return v == AlphaVariant::body ? "body" : "abstract"; }

double kantorovich_constant(const SpectralBounds& b) { return (b.M + b.m) * (b.M + b.m) / (4.0 * b.M * b.m); }

std::array<double, 2> alpha_branches(const SpectralBounds& b, double p, AlphaVariant variant) {
  if (!(p > 0.0)) throw InputError("alpha requires p > 0");
  const double sq = (b.M + b.m) * (b.M + b.m);
  const double denom = variant == AlphaVariant::body ? std::pow(4.0, 2.0 / p) : std::pow(4.0, p);
  return {sq / (4.0 * b.M * b.m), sq / (denom * b.M * b.m)};
}

double alpha(const SpectralBounds& b, double p, AlphaVariant variant) {
  const auto br = alpha_branches(b, p, variant);
  return std::max(br[0], br[1]);
}

PolyaSzegoBounds::PolyaSzegoBounds(double m1_, double M1_, double m2_, double M2_)
    : m1(m1_), M1(M1_), m2(m2_), M2(M2_) {
  if (!(m1 > 0.0 && m1 <= M1 && m2 > 0.0 && m2 <= M2)) {
    throw InputError("Polya-Szego bounds need 0 < m1 <= M1 and 0 < m2 <= M2");
  }
  if (!(m() <= M())) throw InputError("Polya-Szego derived bounds need m <= M");
}

PolyaSzegoBounds PolyaSzegoBounds::from_spectra(const SpectralBounds& a, const SpectralBounds& b) {
  return {std::sqrt(a.m), std::sqrt(a.M), std::sqrt(b.m), std::sqrt(b.M)};
}

double PolyaSzegoBounds::constant() const { return (M() + m()) / (2.0 * std::sqrt(M() * m())); }

void require_within(const SymMatrix& a, const SpectralBounds& bounds, const TolerancePolicy& tol,
                    const std::string& what) {
  const EigenDecomposition e = eigh(a);
  const double t = tol.threshold(std::max(bounds.M, std::abs(e.values.front())));
  if (e.values.back() < bounds.m - t || e.values.front() > bounds.M + t) {
    throw HypothesisViolation("spectral bounds violated: " + what + " has spectrum [" +
                              std::to_string(e.values.back()) + ", " + std::to_string(e.values.front()) +
                              "], outside [" + std::to_string(bounds.m) + ", " + std::to_string(bounds.M) + "]");
  }
}

InequalityReport check(InequalityId id, const VerifierParams& params, const CheckInputs& inputs) {
  Checker checker(id, params, inputs);
  InequalityReport rep = checker.run();
  rep.params.emplace("nu", params.nu);
  rep.params.emplace("p", params.p);
  rep.params.emplace("m", params.bounds.m);
  rep.params.emplace("M", params.bounds.M);
  if (params.bounds_b) {
    rep.params.emplace("m_b", params.bounds_b->m);
    rep.params.emplace("M_b", params.bounds_b->M);
  }
  if (params.alpha_scale != 1.0) rep.params.emplace("alpha_scale", params.alpha_scale);
  return rep;
}

}  // namespace opineq
