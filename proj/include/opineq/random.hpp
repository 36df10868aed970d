#pragma once

// Seeded random inputs. The generator is std::mt19937_64; uniform and normal
// variates are derived from its raw 64-bit output with fixed formulas so that
// samples are identical across standard library implementations.

#include <cstdint>
#include <random>

#include "opineq/linalg.hpp"

namespace opineq {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [0, n).
  std::size_t index(std::size_t n);
  /// Standard normal (Box-Muller, no caching).
  double normal();

 private:
  std::mt19937_64 engine_;
};

/// Mixes a master seed with two stream coordinates (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0);

Matrix sample_gaussian(std::size_t rows, std::size_t cols, Rng& rng);

/// Orthonormal columns of a seeded Gaussian n x k matrix (Gram-Schmidt applied
/// twice), with signs fixed so that the triangular factor has positive diagonal.
Matrix sample_isometry(std::size_t n, std::size_t k, Rng& rng);
Matrix sample_orthogonal(std::size_t n, Rng& rng);
Vector sample_unit_vector(std::size_t n, Rng& rng);

/// Q diag(lambda) Q^T with lambda uniform on [m, M]; for n >= 2 the first two
/// eigenvalues are pinned to m and M.
SpdMatrix sample_spd(std::size_t n, const SpectralBounds& bounds, Rng& rng);

/// Positive semidefinite matrix of rank at most `rank` (Gram matrix G G^T).
SymMatrix sample_psd(std::size_t n, std::size_t rank, Rng& rng);

/// Random symmetric matrix with standard normal entries on and above the diagonal.
SymMatrix sample_symmetric(std::size_t n, Rng& rng);

}  // namespace opineq
