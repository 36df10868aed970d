#include "opineq/suite.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "opineq/random.hpp"

namespace opineq {

namespace {

enum class Outcome { passed, failed, rejected, numerical };

struct Evaluation {
  Outcome outcome = Outcome::rejected;
  double gap = 0.0;
  double scale = 1.0;
  std::string message;
};

struct TrialInputs {
  TrialPoint point;
  SpectralBounds bounds;
  SpectralBounds bounds_b;
  MeanDescriptor sigma;
  MeanDescriptor tau;
  PositiveUnitalMap map;
  CheckInputs main;
  CheckInputs polya;
};

MeanDescriptor sample_mean(double nu, Rng& rng) {
  static constexpr double kPowers[] = {-1.0, -0.5, 0.5, 1.0};
  switch (rng.index(4)) {
    case 0:
      return MeanDescriptor::arithmetic(nu);
    case 1:
      return MeanDescriptor::geometric(nu);
    case 2:
      return MeanDescriptor::harmonic(nu);
    default:
      return MeanDescriptor::power(nu, kPowers[rng.index(4)]);
  }
}

// Everything is drawn regardless of which ids run, so a trial's inputs depend
// only on (seed, trial).
TrialInputs sample_trial(const SampleConfig& config, std::size_t trial) {
  const TrialPoint pt = trial_point(config, trial);
  const SpectralBounds bounds = config.bounds[pt.bounds_index];
  const SpectralBounds bounds_b = config.bounds[(pt.bounds_index + 1) % config.bounds.size()];
  Rng rng(derive_seed(config.seed, trial));
  const std::size_t n = pt.dim;

  SpdMatrix a = sample_spd(n, bounds, rng);
  SpdMatrix b = sample_spd(n, bounds, rng);
  SpdMatrix b_ps = sample_spd(n, bounds_b, rng);
  MeanDescriptor sigma = sample_mean(pt.nu, rng);
  MeanDescriptor tau = sample_mean(pt.nu, rng);
  PositiveUnitalMap map = sample_map(n, rng);
  Vector x = sample_unit_vector(n, rng);
  const double sa = rng.uniform(bounds.m, bounds.M);
  const double sb = rng.uniform(bounds.m, bounds.M);

  const std::size_t n_blocks = 1 + rng.index(3);
  std::vector<SpdMatrix> blocks_a;
  std::vector<SpdMatrix> blocks_b;
  for (std::size_t j = 0; j < n_blocks; ++j) {
    blocks_a.push_back(sample_spd(n, bounds, rng));
    blocks_b.push_back(sample_spd(n, bounds_b, rng));
  }

  // Constant near the optimal one so both sides of the equivalence occur.
  const SpdMatrix b_inv_half = power(b, -0.5);
  const double c_star = lambda_max(sandwich(b_inv_half, a));
  const double c = c_star * std::exp(rng.uniform(-0.1, 0.1));

  CheckInputs main;
  main.a = a;
  main.b = b;
  main.scalar_a = sa;
  main.scalar_b = sb;
  main.x = x;
  main.lemma_constant = c;

  CheckInputs polya;
  polya.a = std::move(a);
  polya.b = std::move(b_ps);
  polya.blocks_a = std::move(blocks_a);
  polya.blocks_b = std::move(blocks_b);

  return TrialInputs{pt, bounds, bounds_b, sigma, tau, std::move(map), std::move(main), std::move(polya)};
}

bool uses_polya_inputs(InequalityId id) {
  switch (id) {
    case InequalityId::POLYA_SZEGO:
    case InequalityId::THM_2_13_A:
    case InequalityId::EQ_2_11:
    case InequalityId::EQ_2_12:
    case InequalityId::COR_2_14:
      return true;
    default:
      return false;
  }
}

Evaluation evaluate(const SampleConfig& config, const TrialInputs& t, InequalityId id) {
  VerifierParams params;
  params.nu = t.point.nu;
  params.p = t.point.p;
  params.bounds = t.bounds;
  params.sigma = t.sigma;
  params.tau = t.tau;
  params.alpha_variant = config.alpha_variant;
  params.alpha_scale = config.alpha_scale;
  params.tolerance = config.tolerance;
  const bool polya = uses_polya_inputs(id);
  if (polya) params.bounds_b = t.bounds_b;
  if (id != InequalityId::COR_2_14) params.map = t.map;

  Evaluation ev;
  try {
    const InequalityReport rep = check(id, params, polya ? t.polya : t.main);
    ev.outcome = rep.holds ? Outcome::passed : Outcome::failed;
    ev.gap = rep.gap;
    ev.scale = rep.scale;
  } catch (const HypothesisViolation& e) {
    ev.outcome = Outcome::rejected;
    ev.message = e.what();
  } catch (const Error& e) {
    ev.outcome = Outcome::numerical;
    ev.message = e.what();
  }
  return ev;
}

}  // namespace

void SampleConfig::validate() const {
  if (trials == 0) throw InputError("trials must be >= 1");
  if (dims.empty()) throw InputError("dims must be nonempty");
  for (const auto d : dims)
    if (d == 0) throw InputError("dims must be >= 1");
  if (bounds.empty()) throw InputError("at least one (m, M) pair is required");
  if (nu_grid.empty()) throw InputError("nu grid must be nonempty");
  for (const double nu : nu_grid) validate_weight(nu);
  if (p_grid.empty()) throw InputError("p grid must be nonempty");
  for (const double p : p_grid)
    if (!(p > 0.0) || !std::isfinite(p)) throw InputError("p grid values must be positive");
  if (!(alpha_scale > 0.0)) throw InputError("alpha scale must be positive");
}

TrialPoint trial_point(const SampleConfig& config, std::size_t trial) {
  std::size_t i = trial;
  TrialPoint pt{};
  pt.dim = config.dims[i % config.dims.size()];
  i /= config.dims.size();
  pt.nu = config.nu_grid[i % config.nu_grid.size()];
  i /= config.nu_grid.size();
  pt.p = config.p_grid[i % config.p_grid.size()];
  i /= config.p_grid.size();
  pt.bounds_index = i % config.bounds.size();
  return pt;
}

std::size_t SuiteReport::total_failures() const {
  std::size_t total = 0;
  for (const auto& s : ids) total += s.failed;
  return total;
}

SuiteReport run_suite(const SampleConfig& config, std::span<const InequalityId> ids) {
  config.validate();
  if (ids.empty()) throw InputError("no inequality ids requested");

  std::vector<std::vector<Evaluation>> results(config.trials);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t trial = next++; trial < config.trials; trial = next++) {
      std::vector<Evaluation> row;
      row.reserve(ids.size());
      try {
        const TrialInputs inputs = sample_trial(config, trial);
        for (const auto id : ids) row.push_back(evaluate(config, inputs, id));
      } catch (const Error& e) {
        // Sampling itself failed; charge every id for this trial.
        row.assign(ids.size(), Evaluation{Outcome::numerical, 0.0, 1.0, e.what()});
      }
      results[trial] = std::move(row);
    }
  };

  unsigned n_threads = config.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : config.threads;
  n_threads = static_cast<unsigned>(std::min<std::size_t>(n_threads, config.trials));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n_threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  SuiteReport report{config, {}};
  for (std::size_t k = 0; k < ids.size(); ++k) {
    IdSummary s;
    s.id = ids[k];
    for (std::size_t trial = 0; trial < config.trials; ++trial) {
      const Evaluation& ev = results[trial][k];
      switch (ev.outcome) {
        case Outcome::passed:
          ++s.passed;
          break;
        case Outcome::failed:
          ++s.failed;
          break;
        case Outcome::rejected:
          ++s.rejected;
          continue;
        case Outcome::numerical:
          ++s.failed;
          ++s.numerical_errors;
          break;
      }
      const bool bad = ev.outcome != Outcome::passed;
      if (bad && !s.first_failure) {
        const TrialPoint pt = trial_point(config, trial);
        const SpectralBounds& b = config.bounds[pt.bounds_index];
        s.first_failure = FailureInfo{trial, pt.dim, pt.nu, pt.p, b.m, b.M, ev.gap, ev.message};
      }
      if (ev.outcome == Outcome::numerical) continue;
      const double rel = ev.gap / ev.scale;
      if (!s.worst_relative_gap || rel < *s.worst_relative_gap) {
        s.worst_relative_gap = rel;
        s.worst_gap = ev.gap;
        s.worst_trial = trial;
      }
    }
    report.ids.push_back(std::move(s));
  }
  return report;
}

}  // namespace opineq
