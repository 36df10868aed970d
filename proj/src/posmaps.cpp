#include "opineq/posmaps.hpp"

#include <algorithm>
#include <cmath>

namespace opineq {

namespace {

constexpr double kUnitalTolerance = 1e-12;

double isometry_defect(const Matrix& t) {
  return (t.transpose() * t - Matrix::identity(t.cols())).frobenius_norm();
}

}  // namespace

std::string to_string(MapVariant v) {
  switch (v) {
    case MapVariant::identity:
      return "identity";
    case MapVariant::normalized_trace:
      return "normalized_trace";
    case MapVariant::isometry_congruence:
      return "isometry_congruence";
    case MapVariant::block_average:
      return "block_average";
    case MapVariant::convex_combination:
      return "convex_combination";
  }
  return "unknown";
}

PositiveUnitalMap PositiveUnitalMap::identity(std::size_t n) {
  if (n == 0) throw InvalidMap("identity map needs n >= 1");
  return {MapVariant::identity, n, n};
}

PositiveUnitalMap PositiveUnitalMap::normalized_trace(std::size_t n) {
  if (n == 0) throw InvalidMap("normalized trace needs n >= 1");
  return {MapVariant::normalized_trace, n, 1};
}

PositiveUnitalMap PositiveUnitalMap::isometry_congruence(Matrix t) {
  if (t.rows() == 0 || t.cols() == 0 || t.cols() > t.rows()) {
    throw InvalidMap("isometry T must be n x k with 1 <= k <= n");
  }
  if (isometry_defect(t) > kUnitalTolerance) throw InvalidMap("isometry T does not satisfy T^T T = I");
  PositiveUnitalMap phi(MapVariant::isometry_congruence, t.rows(), t.cols());
  phi.t_ = std::move(t);
  return phi;
}

PositiveUnitalMap PositiveUnitalMap::general_congruence(Matrix t) {
  if (t.rows() == 0 || t.cols() == 0) throw InvalidMap("congruence matrix must be nonempty");
  PositiveUnitalMap phi(MapVariant::isometry_congruence, t.rows(), t.cols());
  phi.t_ = std::move(t);
  return phi;
}

PositiveUnitalMap PositiveUnitalMap::block_average(std::size_t n_blocks, std::size_t block_dim) {
  if (n_blocks == 0 || block_dim == 0) throw InvalidMap("block average needs positive block count and size");
  PositiveUnitalMap phi(MapVariant::block_average, n_blocks * block_dim, block_dim);
  phi.n_blocks_ = n_blocks;
  return phi;
}

PositiveUnitalMap PositiveUnitalMap::convex_combination(std::vector<Term> terms) {
  if (terms.empty()) throw InvalidMap("convex combination needs at least one term");
  double total = 0.0;
  const std::size_t in = terms.front().map.input_dim();
  const std::size_t out = terms.front().map.output_dim();
  for (const auto& term : terms) {
    if (!(term.weight >= 0.0)) throw InvalidMap("convex combination weights must be nonnegative");
    if (term.map.input_dim() != in || term.map.output_dim() != out) {
      throw InvalidMap("convex combination terms must share input and output dimensions");
    }
    total += term.weight;
  }
  if (std::abs(total - 1.0) > kUnitalTolerance) throw InvalidMap("convex combination weights must sum to 1");
  PositiveUnitalMap phi(MapVariant::convex_combination, in, out);
  phi.terms_ = std::make_shared<const std::vector<Term>>(std::move(terms));
  return phi;
}

SymMatrix PositiveUnitalMap::operator()(const SymMatrix& x) const {
  if (x.dim() != in_) {
    throw DimensionMismatch("map expects " + std::to_string(in_) + "x" + std::to_string(in_) + " input, got " +
                            std::to_string(x.dim()));
  }
  switch (variant_) {
    case MapVariant::identity:
      return x;
    case MapVariant::normalized_trace:
      return SymMatrix::scalar(x.trace() / static_cast<double>(in_));
    case MapVariant::isometry_congruence:
      return congruence(t_, x);
    case MapVariant::block_average: {
      Matrix acc(out_, out_);
      for (std::size_t b = 0; b < n_blocks_; ++b)
        for (std::size_t i = 0; i < out_; ++i)
          for (std::size_t j = 0; j < out_; ++j) acc(i, j) += x(b * out_ + i, b * out_ + j);
      return SymMatrix((1.0 / static_cast<double>(n_blocks_)) * acc);
    }
    case MapVariant::convex_combination: {
      Matrix acc(out_, out_);
      for (const auto& term : *terms_) acc = acc + term.weight * term.map(x).matrix();
      return SymMatrix(acc);
    }
  }
  throw InvalidMap("unknown map variant");
}

bool verify_unital(const PositiveUnitalMap& phi) {
  const SymMatrix image = phi(SymMatrix::identity(phi.input_dim()));
  return (image - SymMatrix::identity(phi.output_dim())).frobenius_norm() <= kUnitalTolerance;
}

bool verify_positive_sampled(const PositiveUnitalMap& phi, std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw InputError("verify_positive_sampled: trials must be >= 1");
  const std::size_t n = phi.input_dim();
  Rng rng(seed);
  for (std::size_t i = 0; i < trials; ++i) {
    const std::size_t rank = 1 + rng.index(n);
    const SymMatrix x = sample_psd(n, rank, rng);
    const SymMatrix y = phi(x);
    if (lambda_min(y) < -1e-10 * std::max(1.0, operator_norm(x))) return false;
  }
  return true;
}

PositiveUnitalMap sample_map(std::size_t n, Rng& rng) {
  const std::size_t k = 1 + rng.index(n);
  std::vector<PositiveUnitalMap> maps;
  const std::size_t n_congruences = 1 + rng.index(3);
  for (std::size_t i = 0; i < n_congruences; ++i) {
    maps.push_back(PositiveUnitalMap::isometry_congruence(sample_isometry(n, k, rng)));
  }
  if (k == 1 && rng.uniform() < 0.5) maps.push_back(PositiveUnitalMap::normalized_trace(n));
  if (n == 2 * k && rng.uniform() < 0.5) maps.push_back(PositiveUnitalMap::block_average(2, k));
  if (maps.size() == 1) return maps.front();

  std::vector<double> w(maps.size());
  double total = 0.0;
  for (double& x : w) {
    x = 0.05 + rng.uniform();
    total += x;
  }
  std::vector<PositiveUnitalMap::Term> terms;
  double assigned = 0.0;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    // Last weight absorbs rounding so the sum is exactly 1.
    const double wi = i + 1 == maps.size() ? 1.0 - assigned : w[i] / total;
    assigned += wi;
    terms.push_back({wi, maps[i]});
  }
  return PositiveUnitalMap::convex_combination(std::move(terms));
}

}  // namespace opineq
