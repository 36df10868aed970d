#include <cmath>

#include "doctest.h"
#include "opineq/means.hpp"
#include "opineq/random.hpp"
#include "support.hpp"

using namespace opineq;
using testing::diag;
using testing::max_abs_diff;

TEST_CASE("commuting inputs reduce to scalar means") {
  const SpdMatrix a(diag({1.0, 4.0}));
  const SpdMatrix b(diag({4.0, 1.0}));
  CHECK(max_abs_diff(geometric_mean(a, b, 0.5), diag({2.0, 2.0})) < 1e-14);
  CHECK(max_abs_diff(arithmetic_mean(a, b, 0.5), diag({2.5, 2.5})) < 1e-15);
  CHECK(max_abs_diff(harmonic_mean(a, b, 0.5), diag({1.6, 1.6})) < 1e-14);
  CHECK(max_abs_diff(geometric_mean(a, b, 0.25), diag({std::pow(4.0, 0.25), std::pow(4.0, 0.75)})) < 1e-14);
}

TEST_CASE("endpoints return the inputs exactly") {
  Rng rng(1);
  const SpdMatrix a = sample_spd(3, {1.0, 3.0}, rng);
  const SpdMatrix b = sample_spd(3, {1.0, 3.0}, rng);
  for (const auto& mean : {MeanDescriptor::arithmetic(0), MeanDescriptor::geometric(0), MeanDescriptor::harmonic(0),
                           MeanDescriptor::power(0, 0.5)}) {
    CHECK(mean.apply(a, b).sym() == a.sym());
    CHECK(mean.with_nu(1.0).apply(a, b).sym() == b.sym());
  }
}

TEST_CASE("geometric mean solves the Riccati equation X A^-1 X = B") {
  Rng rng(2);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 1 + rng.index(5);
    const SpdMatrix a = sample_spd(n, {0.5, 50.0}, rng);
    const SpdMatrix b = sample_spd(n, {0.5, 50.0}, rng);
    const SpdMatrix g = geometric_mean(a, b, 0.5);
    const Matrix lhs = g * inverse(a) * g.sym().matrix();
    CHECK(max_abs_diff(lhs, b.sym().matrix()) <= 1e-10 * 50.0);
    // Symmetric in its arguments at nu = 1/2.
    CHECK(max_abs_diff(g, geometric_mean(b, a, 0.5)) <= 1e-11 * 50.0);
  }
}

TEST_CASE("harmonic <= power(t) <= arithmetic and harmonic <= geometric <= arithmetic") {
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + rng.index(5);
    const double nu = rng.uniform();
    const SpdMatrix a = sample_spd(n, {1.0, 7.0}, rng);
    const SpdMatrix b = sample_spd(n, {1.0, 7.0}, rng);
    const SymMatrix h = harmonic_mean(a, b, nu);
    const SymMatrix g = geometric_mean(a, b, nu);
    const SymMatrix m = arithmetic_mean(a, b, nu);
    CHECK(loewner_leq(h, g).holds);
    CHECK(loewner_leq(g, m).holds);
    for (double t : {-1.0, -0.5, 0.5, 1.0}) {
      const SymMatrix pm = power_mean(a, b, nu, t);
      CHECK(loewner_leq(h, pm).holds);
      CHECK(loewner_leq(pm, m).holds);
    }
  }
}

TEST_CASE("power mean at t = 1 and t = -1") {
  Rng rng(4);
  const SpdMatrix a = sample_spd(3, {1.0, 3.0}, rng);
  const SpdMatrix b = sample_spd(3, {1.0, 3.0}, rng);
  CHECK(max_abs_diff(power_mean(a, b, 0.3, 1.0), arithmetic_mean(a, b, 0.3)) < 1e-13);
  CHECK(max_abs_diff(power_mean(a, b, 0.3, -1.0), harmonic_mean(a, b, 0.3)) < 1e-13);
}

TEST_CASE("argument validation") {
  const SpdMatrix a(diag({1.0, 2.0}));
  const SpdMatrix c(diag({1.0, 2.0, 3.0}));
  CHECK_THROWS_AS(arithmetic_mean(a, a, 1.5), InputError);
  CHECK_THROWS_AS(geometric_mean(a, a, -0.1), InputError);
  CHECK_THROWS_AS(geometric_mean(a, c, 0.5), DimensionMismatch);
  CHECK_THROWS_AS(power_mean(a, a, 0.5, 0.0), InputError);
  CHECK_THROWS_AS(MeanDescriptor::power(0.5, 2.0), InputError);
  CHECK_THROWS_AS(parse_mean("median", 0.5), InputError);
  CHECK(parse_mean("power", 0.5, -0.5).name() == "power(-0.5)");
  CHECK(parse_mean("harmonic", 0.25).kind() == MeanKind::harmonic);
  CHECK(MeanDescriptor::geometric(0.8).r() == doctest::Approx(0.2));
}

TEST_CASE("inverse AM-GM defect is positive semidefinite") {
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + rng.index(5);
    const SpdMatrix a = sample_spd(n, {0.5, 50.0}, rng);
    const SpdMatrix b = sample_spd(n, {0.5, 50.0}, rng);
    CHECK(lambda_min(inverse_amgm_defect(a, b)) >= -1e-12);
  }
}

TEST_CASE("refinement term vanishes at the endpoints and for A = B") {
  Rng rng(6);
  const SpectralBounds bounds{1.0, 3.0};
  const SpdMatrix a = sample_spd(3, bounds, rng);
  const SpdMatrix b = sample_spd(3, bounds, rng);
  CHECK(refinement_term(a, b, 0.0, bounds) == SymMatrix::zero(3));
  CHECK(refinement_term(a, b, 1.0, bounds) == SymMatrix::zero(3));
  CHECK(refinement_term(a, a, 0.5, bounds).frobenius_norm() < 1e-13);
  // 2 r M m scaling: nu = 0.25 gives half of nu = 0.5.
  const SymMatrix half = refinement_term(a, b, 0.5, bounds);
  const SymMatrix quarter = refinement_term(a, b, 0.25, bounds);
  CHECK(max_abs_diff(2.0 * quarter, half) < 1e-14);
}
