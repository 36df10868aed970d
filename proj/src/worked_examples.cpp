#include "opineq/worked_examples.hpp"

#include <cmath>

#include "opineq/means.hpp"
#include "opineq/posmaps.hpp"

namespace opineq {

namespace {

GoldenEntry within(std::string name, double computed, double expected, double tol, bool asserted = true) {
  GoldenEntry e{std::move(name), computed, expected, tol, asserted};
  e.passed = std::abs(computed - expected) <= tol;
  return e;
}

GoldenEntry positive(std::string name, double computed, bool asserted = true) {
  GoldenEntry e{std::move(name), computed, 0.0, 0.0, asserted, true};
  e.passed = computed > 0.0;
  return e;
}

void add_upper(std::vector<GoldenEntry>& out, const std::string& prefix, const SymMatrix& computed,
               const SymMatrix& expected, double tol, bool asserted = true) {
  for (std::size_t i = 0; i < computed.dim(); ++i)
    for (std::size_t j = i; j < computed.dim(); ++j) {
      out.push_back(within(prefix + "(" + std::to_string(i) + "," + std::to_string(j) + ")", computed(i, j),
                           expected(i, j), tol, asserted));
    }
}

// Phi^p(A nabla B + refinement) and Phi^p(A nabla B) at nu = 1/2.
struct Pipeline {
  SymMatrix nabla;
  SymMatrix refined;
  SymMatrix lhs_refined;
  SymMatrix lhs_plain;
};

Pipeline run_pipeline(const SpdMatrix& a, const SpdMatrix& b, const PositiveUnitalMap& phi, const SpectralBounds& bounds,
                      double p) {
  const SymMatrix nabla = arithmetic_mean(a, b, 0.5);
  const SymMatrix refined = nabla + refinement_term(a, b, 0.5, bounds);
  return {nabla, refined, power(SpdMatrix(phi(refined)), p), power(SpdMatrix(phi(nabla)), p)};
}

}  // namespace

bool WorkedExample::passed() const {
  for (const auto& e : entries)
    if (e.asserted && !e.passed) return false;
  return true;
}

WorkedExample example_2_9() {
  const SpdMatrix a(SymMatrix::from_rows({{1.75, 0.433}, {0.433, 1.25}}));
  const SpdMatrix b(SymMatrix::from_rows({{2.5, 0.5}, {0.5, 2.5}}));
  const SpectralBounds bounds{1.0, 3.0};
  const auto phi = PositiveUnitalMap::normalized_trace(2);
  const Pipeline r = run_pipeline(a, b, phi, bounds, 3.0);

  WorkedExample ex{"2.9", {}, {}, {}};
  ex.matrices = {{"A", a}, {"B", b}, {"A nabla B", r.nabla}, {"refined", r.refined}};

  // Four printed decimals: exact agreement after rounding.
  add_upper(ex.entries, "A nabla B", r.nabla, SymMatrix::from_rows({{2.1250, 0.4665}, {0.4665, 1.8750}}), 5e-5);
  add_upper(ex.entries, "refined", r.refined, SymMatrix::from_rows({{2.1601, 0.4260}, {0.4260, 2.0016}}), 5e-4);
  const double cubed_refined = r.lhs_refined(0, 0);
  const double cubed_plain = r.lhs_plain(0, 0);
  // The printed 9.0095 was computed from rounded intermediates.
  ex.entries.push_back(within("Phi^3(refined)", cubed_refined, 9.0095, 1e-2));
  ex.entries.push_back(within("Phi^3(A nabla B)", cubed_plain, 8.0, 1e-12));
  ex.entries.push_back(within("difference", cubed_refined - cubed_plain, 1.0095, 1e-2, false));
  ex.entries.push_back(positive("difference > 0", cubed_refined - cubed_plain));
  return ex;
}

WorkedExample example_2_10() {
  const double h = std::sqrt(2.0) / 2.0;
  const Matrix t = Matrix::from_rows({{h, h}, {-h, h}});
  const SpdMatrix a(SymMatrix::from_rows({{5.0, -2.0}, {-2.0, 5.0}}));
  const SpdMatrix b(SymMatrix::from_rows({{4.75, 0.433}, {0.433, 4.25}}));
  const SpectralBounds bounds{3.0, 7.0};
  const double p = 5.0 / 3.0;
  const auto phi = PositiveUnitalMap::isometry_congruence(t);
  const Pipeline r = run_pipeline(a, b, phi, bounds, p);
  const SymMatrix diff = r.lhs_refined - r.lhs_plain;

  WorkedExample ex{"2.10", {}, {}, {}};
  ex.matrices = {{"A", a},
                 {"B", b},
                 {"A nabla B", r.nabla},
                 {"refined", r.refined},
                 {"Phi^p(refined)", r.lhs_refined},
                 {"Phi^p(A nabla B)", r.lhs_plain},
                 {"difference", diff}};

  add_upper(ex.entries, "A nabla B", r.nabla, SymMatrix::from_rows({{4.8750, -0.7835}, {-0.7835, 4.6250}}), 5e-5);
  add_upper(ex.entries, "refined", r.refined, SymMatrix::from_rows({{5.0283, -0.7730}, {-0.7730, 4.7909}}), 5e-4);
  ex.entries.push_back(within("difference(0,0)", diff(0, 0), 0.7838, 2e-3));
  ex.entries.push_back(within("difference(1,1)", diff(1, 1), 0.7199, 2e-3));
  ex.entries.push_back(positive("lambda_min(difference)", lambda_min(diff)));
  // A symmetric matrix with diagonal (0.78, 0.72) and off-diagonal -1.0172
  // has negative determinant, so the printed value cannot be right.
  ex.entries.push_back(within("difference(0,1)", diff(0, 1), -1.0172, 0.0, false));

  // Same pipeline fed the printed (rounded) intermediates instead.
  const SpdMatrix printed_nabla(SymMatrix::from_rows({{4.8750, -0.7835}, {-0.7835, 4.6250}}));
  const SpdMatrix printed_refined(SymMatrix::from_rows({{5.0283, -0.7730}, {-0.7730, 4.7909}}));
  const SymMatrix diff_printed = power(SpdMatrix(phi(printed_refined)), p).sym() - power(SpdMatrix(phi(printed_nabla)), p).sym();
  ex.matrices.emplace_back("difference from printed intermediates", diff_printed);
  ex.entries.push_back(within("printed route difference(0,0)", diff_printed(0, 0), 0.7838, 2e-3, false));
  ex.entries.push_back(within("printed route difference(1,1)", diff_printed(1, 1), 0.7199, 2e-3, false));
  ex.entries.push_back(within("printed route difference(0,1)", diff_printed(0, 1), -1.0172, 0.0, false));

  ex.notes.push_back("printed off-diagonal -1.0172 is inconsistent with a positive definite difference; "
                     "recomputed value is " + std::to_string(diff(0, 1)));
  return ex;
}

WorkedExample worked_example(std::string_view which) {
  if (which == "2.9") return example_2_9();
  if (which == "2.10") return example_2_10();
  throw InputError("unknown example '" + std::string(which) + "' (expected 2.9 or 2.10)");
}

}  // namespace opineq
