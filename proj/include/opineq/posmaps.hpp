#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "opineq/linalg.hpp"
#include "opineq/random.hpp"

namespace opineq {

enum class MapVariant { identity, normalized_trace, isometry_congruence, block_average, convex_combination };

std::string to_string(MapVariant v);

/// A positive linear map from n x n to k x k symmetric matrices.
///
/// All factories except `general_congruence` produce unital maps:
///  - identity(n): X -> X
///  - normalized_trace(n): X -> [tr(X) / n], a 1 x 1 output
///  - isometry_congruence(T): X -> T^T X T for n x k T with T^T T = I_k
///  - block_average(b, d): diag blocks X_1..X_b of size d -> (1/b) sum X_j
///  - convex_combination: sum w_i Phi_i, weights >= 0 summing to 1
class PositiveUnitalMap {
 public:
  struct Term;

  static PositiveUnitalMap identity(std::size_t n);
  static PositiveUnitalMap normalized_trace(std::size_t n);
  /// Throws InvalidMap unless ||T^T T - I||_F <= 1e-12.
  static PositiveUnitalMap isometry_congruence(Matrix t);
  static PositiveUnitalMap block_average(std::size_t n_blocks, std::size_t block_dim);
  /// Throws InvalidMap on empty input, negative weights, weights not summing
  /// to 1 within 1e-12, or mismatched dimensions.
  static PositiveUnitalMap convex_combination(std::vector<Term> terms);
  /// X -> T^T X T without the isometry check. Positive, but unital only when
  /// T is an isometry.
  static PositiveUnitalMap general_congruence(Matrix t);

  MapVariant variant() const { return variant_; }
  std::size_t input_dim() const { return in_; }
  std::size_t output_dim() const { return out_; }

  const Matrix& congruence_matrix() const { return t_; }
  std::size_t n_blocks() const { return n_blocks_; }
  const std::vector<Term>& terms() const { return *terms_; }

  /// Throws DimensionMismatch if X is not input_dim() x input_dim().
  SymMatrix operator()(const SymMatrix& x) const;

 private:
  PositiveUnitalMap(MapVariant v, std::size_t in, std::size_t out) : variant_(v), in_(in), out_(out) {}

  MapVariant variant_;
  std::size_t in_;
  std::size_t out_;
  Matrix t_;
  std::size_t n_blocks_ = 0;
  std::shared_ptr<const std::vector<Term>> terms_;
};

struct PositiveUnitalMap::Term {
  double weight;
  PositiveUnitalMap map;
};

inline SymMatrix apply_map(const PositiveUnitalMap& phi, const SymMatrix& x) { return phi(x); }

/// ||Phi(I) - I||_F <= 1e-12.
bool verify_unital(const PositiveUnitalMap& phi);

/// Applies phi to `trials` random PSD matrices (mixed ranks) and checks
/// lambda_min(Phi(X)) >= -1e-10 * max(1, ||X||).
bool verify_positive_sampled(const PositiveUnitalMap& phi, std::size_t trials, std::uint64_t seed);

/// Random unital positive map on n x n: a convex combination of 1-3 isometry
/// congruences to a common output size k, plus the normalized trace when k = 1
/// and a two-block average when n = 2k (each with probability 1/2).
PositiveUnitalMap sample_map(std::size_t n, Rng& rng);

}  // namespace opineq
