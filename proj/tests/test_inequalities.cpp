#include <cmath>
#include <set>

#include "doctest.h"
#include "opineq/inequalities.hpp"
#include "opineq/random.hpp"
#include "support.hpp"

using namespace opineq;
using testing::diag;

namespace {

struct Setup {
  VerifierParams params;
  CheckInputs inputs;
};

Setup random_setup(std::uint64_t seed, std::size_t n, SpectralBounds bounds, double nu, double p) {
  Rng rng(seed);
  Setup s;
  s.params.nu = nu;
  s.params.p = p;
  s.params.bounds = bounds;
  s.params.sigma = MeanDescriptor::arithmetic(nu);
  s.params.tau = MeanDescriptor::geometric(nu);
  s.params.map = sample_map(n, rng);
  s.inputs.a = sample_spd(n, bounds, rng);
  s.inputs.b = sample_spd(n, bounds, rng);
  s.inputs.x = sample_unit_vector(n, rng);
  s.inputs.scalar_a = rng.uniform(bounds.m, bounds.M);
  s.inputs.scalar_b = rng.uniform(bounds.m, bounds.M);
  s.inputs.lemma_constant = 2.0;
  for (int j = 0; j < 2; ++j) {
    s.inputs.blocks_a.push_back(sample_spd(n, bounds, rng));
    s.inputs.blocks_b.push_back(sample_spd(n, bounds, rng));
  }
  return s;
}

}  // namespace

TEST_CASE("catalog names round-trip") {
  const auto ids = all_inequality_ids();
  CHECK(ids.size() == 35);
  std::set<std::string_view> names;
  for (const auto id : ids) {
    CHECK(parse_inequality_id(to_string(id)) == id);
    CHECK_FALSE(describe(id).empty());
    names.insert(to_string(id));
  }
  CHECK(names.size() == ids.size());
  CHECK_THROWS_AS(parse_inequality_id("THM_9_9"), InputError);
}

TEST_CASE("alpha constant") {
  CHECK(alpha({1.0, 3.0}, 1.0) == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  CHECK(alpha({2.0, 2.0}, 1.0) == 1.0);
  const auto br = alpha_branches({1.0, 3.0}, 2.0);
  CHECK(std::abs(br[0] - br[1]) <= 1e-15);
  // Second branch takes over for large p.
  const auto big = alpha_branches({1.0, 3.0}, 5.0);
  CHECK(big[1] > big[0]);
  CHECK(alpha({1.0, 3.0}, 5.0) == big[1]);
  CHECK(alpha({1.0, 3.0}, 1.0, AlphaVariant::abstract) == doctest::Approx(4.0 / 3.0));
  CHECK(alpha_branches({1.0, 3.0}, 3.0, AlphaVariant::abstract)[1] == doctest::Approx(16.0 / (64.0 * 3.0)));
  CHECK_THROWS_AS(alpha({1.0, 3.0}, 0.0), InputError);
  CHECK(kantorovich_constant({1.0, 3.0}) == doctest::Approx(4.0 / 3.0));
  CHECK(parse_alpha_variant("abstract") == AlphaVariant::abstract);
  CHECK_THROWS_AS(parse_alpha_variant("paper"), InputError);
}

TEST_CASE("every id holds on admissible random inputs") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::size_t n = 1 + seed % 4;
    const double p = seed % 2 ? 3.0 : 0.75;
    Setup s = random_setup(seed, n, {1.0, 3.0}, 0.5, p);
    for (const auto id : all_inequality_ids()) {
      try {
        const InequalityReport r = check(id, s.params, s.inputs);
        CHECK_MESSAGE(r.holds, to_string(id), " seed ", seed, " gap ", r.gap);
        CHECK(r.params.at("nu") == 0.5);
      } catch (const HypothesisViolation&) {
        // exponent outside this id's range
      }
    }
  }
}

TEST_CASE("exponent hypotheses") {
  Setup s = random_setup(1, 3, {1.0, 3.0}, 0.5, 3.0);
  CHECK_THROWS_AS(check(InequalityId::P_LE_2, s.params, s.inputs), HypothesisViolation);
  CHECK_NOTHROW(check(InequalityId::FU_HE, s.params, s.inputs));
  s.params.p = 2.0;
  CHECK_NOTHROW(check(InequalityId::P_LE_2_MAPS, s.params, s.inputs));
  CHECK_THROWS_AS(check(InequalityId::FU_HE_MAPS, s.params, s.inputs), HypothesisViolation);
  CHECK_THROWS_AS(check(InequalityId::REMARK_2_8_A, s.params, s.inputs), HypothesisViolation);
  s.params.p = 1.0;
  CHECK_THROWS_AS(check(InequalityId::LEMMA_2_2, s.params, s.inputs), HypothesisViolation);
  CHECK_NOTHROW(check(InequalityId::REMARK_2_8_A, s.params, s.inputs));
  CHECK_NOTHROW(check(InequalityId::REMARK_2_8_B, s.params, s.inputs));
  s.params.p = 0.5;
  CHECK_THROWS_AS(check(InequalityId::REMARK_2_8_B, s.params, s.inputs), HypothesisViolation);
  s.params.p = -1.0;
  CHECK_THROWS_AS(check(InequalityId::THM_2_7_A, s.params, s.inputs), HypothesisViolation);
}

TEST_CASE("spectral bound hypotheses") {
  Setup s = random_setup(2, 3, {1.0, 3.0}, 0.5, 1.0);
  s.params.bounds = {1.5, 3.0};
  try {
    check(InequalityId::THM_2_7_A, s.params, s.inputs);
    FAIL("expected a hypothesis violation");
  } catch (const HypothesisViolation& e) {
    CHECK(std::string(e.what()).find("spectral bounds violated") != std::string::npos);
  }
  // Means and Choi need positivity only.
  CHECK_NOTHROW(check(InequalityId::AMGM, s.params, s.inputs));
  CHECK_NOTHROW(check(InequalityId::CHOI, s.params, s.inputs));
}

TEST_CASE("sigma and tau must share a weight") {
  Setup s = random_setup(3, 2, {1.0, 3.0}, 0.25, 1.0);
  s.params.tau = MeanDescriptor::geometric(0.5);
  CHECK_THROWS_AS(check(InequalityId::HOA_FU, s.params, s.inputs), HypothesisViolation);
  CHECK_THROWS_AS(check(InequalityId::LEMMA_2_4, s.params, s.inputs), HypothesisViolation);
}

TEST_CASE("missing inputs") {
  VerifierParams params;
  params.bounds = {1.0, 3.0};
  CheckInputs empty;
  CHECK_THROWS_AS(check(InequalityId::AMGM, params, empty), InputError);
  CHECK_THROWS_AS(check(InequalityId::COR_2_14, params, empty), InputError);
  CHECK_THROWS_AS(check(InequalityId::SCALAR_KM, params, empty), InputError);
  Setup s = random_setup(4, 2, {1.0, 3.0}, 0.5, 1.0);
  s.inputs.lemma_constant.reset();
  CHECK_THROWS_AS(check(InequalityId::LEMMA_2_3, s.params, s.inputs), InputError);
  s.inputs.x = Vector{0.6, 0.0};
  CHECK_THROWS_AS(check(InequalityId::PROP_2_15, s.params, s.inputs), HypothesisViolation);
}

TEST_CASE("map dimension must match the inputs") {
  Setup s = random_setup(5, 2, {1.0, 3.0}, 0.5, 1.0);
  s.params.map = PositiveUnitalMap::identity(3);
  CHECK_THROWS_AS(check(InequalityId::CHOI, s.params, s.inputs), DimensionMismatch);
}

TEST_CASE("halving alpha breaks the commuting equality case") {
  // A = B = m I: both sides equal up to alpha^p.
  VerifierParams params;
  params.bounds = {1.0, 3.0};
  params.p = 1.0;
  params.nu = 0.5;
  CheckInputs in;
  in.a = SpdMatrix(SymMatrix::identity(2));
  in.b = SpdMatrix(SymMatrix::identity(2));
  CHECK(check(InequalityId::THM_2_7_A, params, in).holds);
  params.alpha_scale = 0.5;
  const auto r = check(InequalityId::THM_2_7_A, params, in);
  CHECK_FALSE(r.holds);
  CHECK(*r.alpha_used == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("LEMMA_2_3 tracks both sides of the equivalence") {
  Setup s = random_setup(6, 3, {1.0, 3.0}, 0.5, 1.0);
  const SpdMatrix& a = *s.inputs.a;
  const SpdMatrix& b = *s.inputs.b;
  const double c_star = lambda_max(sandwich(power(b, -0.5), a));
  for (double f : {0.9, 0.99, 1.01, 1.1}) {
    s.inputs.lemma_constant = c_star * f;
    const auto r = check(InequalityId::LEMMA_2_3, s.params, s.inputs);
    CHECK(r.holds);
    const bool order = r.params.at("order_gap") >= 0.0;
    const bool norm = r.params.at("norm_gap") >= 0.0;
    CHECK(order == norm);
    CHECK(order == (f > 1.0));
  }
}

TEST_CASE("Polya-Szego upper ratio bound must be M2/m1") {
  // A = I, B = diag(1, 16), normalized trace. With the ratio bound M1/m2
  // both derived bounds equal 1 and the constant collapses to 1.
  const SpdMatrix a(SymMatrix::identity(2));
  const SpdMatrix b(diag({1.0, 16.0}));
  const auto phi = PositiveUnitalMap::normalized_trace(2);
  const double lhs = geometric_mean(SpdMatrix(phi(a)), SpdMatrix(phi(b)), 0.5)(0, 0);
  const double phi_gm = phi(geometric_mean(a, b, 0.5))(0, 0);
  const double m1 = 1, big_m1 = 1, m2 = 1, big_m2 = 4;
  const double lit_m = m2 / big_m1;
  const double lit_big_m = big_m1 / m2;
  const double literal = (lit_big_m + lit_m) / (2.0 * std::sqrt(lit_big_m * lit_m));
  CHECK(lhs > literal * phi_gm + 0.1);

  const PolyaSzegoBounds ps(m1, big_m1, m2, big_m2);
  CHECK(ps.M() == 4.0);
  CHECK(ps.m() == 1.0);
  VerifierParams params;
  params.bounds = {1.0, 1.0};
  params.bounds_b = SpectralBounds{1.0, 16.0};
  params.map = phi;
  CheckInputs in;
  in.a = a;
  in.b = b;
  const auto r = check(InequalityId::POLYA_SZEGO, params, in);
  CHECK(r.holds);
  CHECK(*r.alpha_used == doctest::Approx(1.25));
  CHECK(check(InequalityId::THM_2_13_A, params, in).holds);
}

TEST_CASE("B = A^-1 special case needs the swapped coefficients") {
  // A = diag(1, 4) with 1 <= A <= 4, so m = 1, M = 2 and (M^2 + m^2)/(2mM) = 1.25.
  const SpdMatrix a(diag({1.0, 4.0}));
  const double mm = 2.0;
  const SymMatrix g = SymMatrix::identity(2);  // A # A^-1
  const SymMatrix literal = g + 0.5 * (mm * a.sym() + (1.0 / mm) * inverse(a).sym() - 2.0 * g);
  CHECK(lambda_max(literal) == doctest::Approx(4.0625));

  VerifierParams params;
  params.bounds = {1.0, 4.0};
  CheckInputs in;
  in.a = a;
  const auto r = check(InequalityId::THM_2_13_B, params, in);
  CHECK(r.holds);
  CHECK(std::abs(r.gap) < 1e-12);  // equality for this A
  CHECK(*r.alpha_used == doctest::Approx(1.25));
  CHECK(check(InequalityId::KANTOROVICH, params, in).holds);
}

TEST_CASE("vector form needs the fourth roots the other way round") {
  // 1 <= A <= 3, x an eigenvector for 3.
  const double a = 3.0, ai = 1.0 / 3.0, s = std::pow(3.0, 0.25);
  const double c = 4.0 / (2.0 * std::sqrt(3.0));
  const double d = s * std::sqrt(a) - std::sqrt(ai) / s;
  CHECK(std::sqrt(a * ai) + 0.5 * d * d > c + 1.0);

  VerifierParams params;
  params.bounds = {1.0, 3.0};
  CheckInputs in;
  in.a = SpdMatrix(diag({1.0, 3.0}));
  in.x = Vector{0.0, 1.0};
  const auto r = check(InequalityId::PROP_2_15, params, in);
  CHECK(r.holds);
  CHECK(std::abs(r.gap) < 1e-12);  // eigenvector at an endpoint: equality
}

TEST_CASE("COR_2_14 is THM_2_13_A for the block average map") {
  Rng rng(8);
  const SpectralBounds ba{1.0, 3.0};
  const SpectralBounds bb{3.0, 7.0};
  const std::size_t d = 2, k = 3;
  CheckInputs blocks;
  for (std::size_t j = 0; j < k; ++j) {
    blocks.blocks_a.push_back(sample_spd(d, ba, rng));
    blocks.blocks_b.push_back(sample_spd(d, bb, rng));
  }
  VerifierParams params;
  params.bounds = ba;
  params.bounds_b = bb;
  const auto cor = check(InequalityId::COR_2_14, params, blocks);

  std::vector<SymMatrix> as, bs;
  for (std::size_t j = 0; j < k; ++j) {
    as.push_back(blocks.blocks_a[j]);
    bs.push_back(blocks.blocks_b[j]);
  }
  CheckInputs big;
  big.a = SpdMatrix(block_diagonal(as));
  big.b = SpdMatrix(block_diagonal(bs));
  params.map = PositiveUnitalMap::block_average(k, d);
  const auto thm = check(InequalityId::THM_2_13_A, params, big);
  CHECK(cor.holds);
  CHECK(cor.gap == doctest::Approx(static_cast<double>(k) * thm.gap).epsilon(1e-10));
}

TEST_CASE("identities hold with zero gap") {
  Setup s = random_setup(9, 3, {1.0, 3.0}, 0.5, 1.0);
  CHECK(std::abs(check(InequalityId::EQ_2_12, s.params, s.inputs).gap) < 1e-12);
  for (double nu : {0.0, 1.0}) {
    s.params.nu = nu;
    s.params.sigma = MeanDescriptor::arithmetic(nu);
    s.params.tau = MeanDescriptor::geometric(nu);
    CHECK(std::abs(check(InequalityId::EQ_2_5, s.params, s.inputs).gap) < 1e-12);
  }
}

TEST_CASE("PROP_2_5 uses the 4^{1/p} constant") {
  Setup s = random_setup(10, 3, {1.0, 3.0}, 0.5, 3.0);
  const auto r = check(InequalityId::PROP_2_5, s.params, s.inputs);
  const double expected = std::max(kantorovich_constant({1.0, 3.0}), 16.0 / (std::pow(4.0, 1.0 / 3.0) * 3.0));
  CHECK(*r.alpha_used == doctest::Approx(expected).epsilon(1e-15));
  CHECK(r.holds);
}

TEST_CASE("report tolerance scale") {
  Setup s = random_setup(11, 2, {3.0, 7.0}, 0.5, 2.0);
  const auto r = check(InequalityId::LIN_SQ, s.params, s.inputs);
  CHECK(r.scale >= 1.0);
  CHECK(r.tolerance == doctest::Approx(1e-9 * r.scale));
  CHECK(r.alpha_used.has_value());
  CHECK(std::holds_alternative<SymMatrix>(r.lhs));
  const auto n = check(InequalityId::LEMMA_2_1, s.params, s.inputs);
  CHECK(std::holds_alternative<double>(n.lhs));
}
