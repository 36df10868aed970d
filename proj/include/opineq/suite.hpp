#pragma once

// Seeded property suite: samples inputs inside the hypotheses and runs
// catalog verifiers over a grid of (dim, nu, p, bounds).

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "opineq/inequalities.hpp"

namespace opineq {

struct SampleConfig {
  std::vector<std::size_t> dims{1, 2, 3, 4, 5, 6};
  std::vector<SpectralBounds> bounds{{1.0, 3.0}, {3.0, 7.0}, {0.5, 50.0}};
  std::size_t trials = 1000;
  std::uint64_t seed = 42;
  std::vector<double> nu_grid{0.0, 0.25, 0.5, 0.75, 1.0};
  std::vector<double> p_grid{0.5, 1.0, 2.0, 3.0, 5.0};
  TolerancePolicy tolerance{};
  AlphaVariant alpha_variant = AlphaVariant::body;
  double alpha_scale = 1.0;
  /// Worker threads; 0 picks the hardware concurrency. Results do not depend on it.
  unsigned threads = 0;

  /// Throws InputError on empty grids, trials == 0, dims of 0, nu outside
  /// [0, 1] or non-positive p.
  void validate() const;
};

/// Grid coordinates of one trial (mixed radix over dims, nu, p, bounds).
struct TrialPoint {
  std::size_t dim;
  double nu;
  double p;
  std::size_t bounds_index;
};

TrialPoint trial_point(const SampleConfig& config, std::size_t trial);

struct FailureInfo {
  std::size_t trial;
  std::size_t dim;
  double nu;
  double p;
  double m;
  double M;
  double gap;
  std::string message;
};

struct IdSummary {
  InequalityId id;
  std::size_t passed = 0;
  /// Includes numerical errors.
  std::size_t failed = 0;
  std::size_t rejected = 0;
  std::size_t numerical_errors = 0;
  /// Smallest gap / scale over evaluated trials.
  std::optional<double> worst_relative_gap;
  std::optional<double> worst_gap;
  std::optional<std::size_t> worst_trial;
  std::optional<FailureInfo> first_failure;
};

struct SuiteReport {
  SampleConfig config;
  std::vector<IdSummary> ids;

  std::size_t total_failures() const;
};

SuiteReport run_suite(const SampleConfig& config, std::span<const InequalityId> ids);

}  // namespace opineq
