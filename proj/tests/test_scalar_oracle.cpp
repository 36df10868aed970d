#include "doctest.h"
#include "scalar_oracle.hpp"

TEST_CASE("1x1 inputs agree with the scalar formulas") {
  oracle::Comparison cmp;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto k = oracle::make_case(1000 + seed, 1);
    oracle::compare_case(k, cmp);
    CHECK(oracle::mean_deviation(k) <= 1e-12);
  }
  INFO(cmp.first_mismatch);
  CHECK(cmp.mismatches == 0);
  CHECK(cmp.compared > 2000);
}

TEST_CASE("diagonal inputs agree with the scalar formulas") {
  oracle::Comparison cmp;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto k = oracle::make_case(2000 + seed, 2 + seed % 4);
    oracle::compare_case(k, cmp);
    CHECK(oracle::mean_deviation(k) <= 1e-12);
  }
  INFO(cmp.first_mismatch);
  CHECK(cmp.mismatches == 0);
  CHECK(cmp.worst <= 1e-12);
}
