#include <cmath>

#include "doctest.h"
#include "opineq/linalg.hpp"
#include "opineq/random.hpp"
#include "support.hpp"

using namespace opineq;
using testing::max_abs_diff;

TEST_CASE("matrix arithmetic and shape checks") {
  const Matrix a = Matrix::from_rows({{1, 2, 3}, {4, 5, 6}});
  const Matrix b = Matrix::from_rows({{1, 0}, {0, 1}, {1, 1}});
  const Matrix ab = a * b;
  CHECK(ab == Matrix::from_rows({{4, 5}, {10, 11}}));
  CHECK(a.transpose().rows() == 3);
  CHECK((a + a) == 2.0 * a);
  CHECK_THROWS_AS(a + b, DimensionMismatch);
  CHECK_THROWS_AS(a * a, DimensionMismatch);
  CHECK_THROWS_AS(Matrix::from_rows({{1, 2}, {3}}), DimensionMismatch);
  CHECK(a * Vector{1, 1, 1} == Vector{6, 15});
  CHECK(norm2(Vector{3, 4}) == doctest::Approx(5.0));
}

TEST_CASE("symmetric construction averages the off-diagonal") {
  const SymMatrix s(Matrix::from_rows({{1, 2}, {4, 3}}));
  CHECK(s(0, 1) == 3.0);
  CHECK(s(1, 0) == 3.0);
  CHECK(s.trace() == 4.0);
  CHECK_THROWS_AS(SymMatrix(Matrix(2, 3)), DimensionMismatch);
  CHECK_THROWS_AS(SymMatrix(Matrix(0, 0)), DimensionMismatch);
}

TEST_CASE("block diagonal and congruence") {
  const SymMatrix blocks[] = {SymMatrix::scalar(2.0), SymMatrix::from_rows({{1, 1}, {1, 3}})};
  const SymMatrix bd = block_diagonal(blocks);
  CHECK(bd.dim() == 3);
  CHECK(bd(0, 0) == 2.0);
  CHECK(bd(0, 1) == 0.0);
  CHECK(bd(2, 2) == 3.0);
  const Matrix t = Matrix::from_rows({{1}, {0}, {0}});
  CHECK(congruence(t, bd) == SymMatrix::scalar(2.0));
}

TEST_CASE("eigh on known spectra") {
  SUBCASE("diagonal input, sorted descending") {
    const auto e = eigh(testing::diag({1.0, 5.0, 3.0}));
    CHECK(e.values == Vector{5.0, 3.0, 1.0});
  }
  SUBCASE("2x2 rotation of diag(3, 1)") {
    const auto e = eigh(SymMatrix::from_rows({{2, 1}, {1, 2}}));
    CHECK(e.values[0] == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(e.values[1] == doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("repeated eigenvalues keep a stable order") {
    const auto e = eigh(SymMatrix::identity(4));
    CHECK(e.values == Vector{1, 1, 1, 1});
    CHECK(e.vectors == Matrix::identity(4));
  }
  SUBCASE("1x1") {
    const auto e = eigh(SymMatrix::scalar(-2.5));
    CHECK(e.values == Vector{-2.5});
  }
}

TEST_CASE("eigh reconstruction and orthogonality on random matrices") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.index(8);
    const SymMatrix a = sample_symmetric(n, rng);
    const auto e = eigh(a);
    Matrix d(n, n);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = e.values[i];
    const Matrix rec = e.vectors * d * e.vectors.transpose();
    const double scale = std::max(1.0, a.frobenius_norm());
    CHECK(max_abs_diff(rec, a.matrix()) <= 1e-12 * scale);
    CHECK(max_abs_diff(e.vectors.transpose() * e.vectors, Matrix::identity(n)) <= 1e-12);
    for (std::size_t i = 1; i < n; ++i) CHECK(e.values[i - 1] >= e.values[i]);
  }
}

TEST_CASE("spectral bounds validation") {
  CHECK_NOTHROW(SpectralBounds(1.0, 1.0));
  CHECK_THROWS_AS(SpectralBounds(0.0, 1.0), InputError);
  CHECK_THROWS_AS(SpectralBounds(2.0, 1.0), InputError);
  CHECK_THROWS_AS(SpectralBounds(1.0, INFINITY), InputError);
}

TEST_CASE("SpdMatrix rejects non-positive spectra") {
  CHECK_THROWS_AS(SpdMatrix(testing::diag({1.0, 0.0})), NotPositiveDefinite);
  CHECK_THROWS_AS(SpdMatrix(SymMatrix::from_rows({{1, 2}, {2, 1}})), NotPositiveDefinite);
  const SpdMatrix a(SymMatrix::from_rows({{2, 1}, {1, 2}}));
  CHECK(a.lambda_min() == doctest::Approx(1.0));
  CHECK(a.lambda_max() == doctest::Approx(3.0));
}

TEST_CASE("matrix powers") {
  const SpdMatrix a(SymMatrix::from_rows({{2, 1}, {1, 2}}));
  CHECK(power(a, 1.0).sym() == a.sym());
  CHECK(power(a, 0.0).sym() == SymMatrix::identity(2));
  const SpdMatrix r = sqrt(a);
  CHECK(max_abs_diff(SymMatrix(r * r), a) < 1e-14);
  CHECK(max_abs_diff(SymMatrix(a * inverse(a)), SymMatrix::identity(2)) < 1e-14);
  const SpdMatrix cube = power(a, 3.0);
  CHECK(max_abs_diff(cube.sym(), SymMatrix(a * a * a.sym().matrix())) < 1e-12);
  // (A^{1/3})^3 = A
  const SpdMatrix third = power(a, 1.0 / 3.0);
  CHECK(max_abs_diff(SymMatrix(third * third * third.sym().matrix()), a) < 1e-13);
}

TEST_CASE("conditioning floor applies to fractional and negative powers only") {
  const SpdMatrix a(testing::diag({1.0, 1e-13}));
  CHECK_THROWS_AS(power(a, 0.5), IllConditioned);
  CHECK_THROWS_AS(power(a, -1.0), IllConditioned);
  CHECK_NOTHROW(power(a, 2.0));
  CHECK_NOTHROW(power(SpdMatrix(testing::diag({1.0, 1e-11})), 0.5));
}

TEST_CASE("psd_power tolerates roundoff-level negatives") {
  const SymMatrix near(testing::diag({4.0, -1e-12}));
  const SymMatrix r = psd_power(near, 0.5);
  CHECK(r(0, 0) == doctest::Approx(2.0));
  CHECK(r(1, 1) == 0.0);
  CHECK_THROWS_AS(psd_power(testing::diag({4.0, -1e-3}), 0.5), NotPositiveDefinite);
  CHECK_THROWS_AS(psd_power(near, 0.0), InputError);
}

TEST_CASE("apply_function reports non-finite values") {
  CHECK_THROWS_AS(apply_function(testing::diag({1.0, 0.0}), [](double x) { return std::log(x); }), DomainError);
}

TEST_CASE("norms") {
  CHECK(operator_norm(testing::diag({-3.0, 2.0})) == doctest::Approx(3.0));
  const Matrix x = Matrix::from_rows({{3, 0}, {4, 0}});
  CHECK(spectral_norm(x) == doctest::Approx(5.0));
  const Matrix rect = Matrix::from_rows({{1, 2, 2}});
  CHECK(spectral_norm(rect) == doctest::Approx(3.0));
}

TEST_CASE("Loewner order with tolerance") {
  const SymMatrix a = testing::diag({1.0, 2.0});
  const SymMatrix b = testing::diag({1.0, 3.0});
  CHECK(loewner_leq(a, b).holds);
  CHECK_FALSE(loewner_leq(b, a).holds);
  CHECK(loewner_leq(a, a).gap == 0.0);
  // Within tolerance: 1e-10 below at scale 3.
  const SymMatrix c = testing::diag({1.0 - 1e-10, 3.0});
  CHECK(loewner_leq(a, c).holds);
  CHECK_FALSE(loewner_leq(a, c, TolerancePolicy{1e-12}).holds);
  CHECK(TolerancePolicy{}.threshold(0.5) == 1e-9);
  CHECK(TolerancePolicy{}.threshold(100.0) == doctest::Approx(1e-7));
  CHECK(TolerancePolicy::absolute(1e-12).threshold(100.0) == 1e-12);
  CHECK_THROWS_AS(loewner_leq(a, SymMatrix::identity(3)), DimensionMismatch);
}

TEST_CASE("block norm test agrees with the spectral norm") {
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    const Matrix x = sample_gaussian(1 + rng.index(4), 1 + rng.index(4), rng);
    const double s = spectral_norm(x);
    CHECK(block_norm_check(x, s * (1 + 1e-6)));
    CHECK_FALSE(block_norm_check(x, s * (1 - 1e-6)));
  }
}
