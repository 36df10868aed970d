#include "opineq/random.hpp"

#include <cmath>
#include <numbers>

namespace opineq {

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::size_t Rng::index(std::size_t n) {
  if (n == 0) throw InputError("Rng::index: empty range");
  return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n;
}

double Rng::normal() {
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b) {
  return splitmix64(splitmix64(splitmix64(master) ^ a) ^ (b * 0xd1b54a32d192ed03ULL));
}

Matrix sample_gaussian(std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix g(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) g(i, j) = rng.normal();
  return g;
}

Matrix sample_isometry(std::size_t n, std::size_t k, Rng& rng) {
  if (k > n || k == 0) throw InputError("sample_isometry: need 1 <= k <= n");
  Matrix q = sample_gaussian(n, k, rng);
  for (std::size_t j = 0; j < k; ++j) {
    double rjj = 0.0;
    while (rjj == 0.0) {
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t i = 0; i < j; ++i) {
          double proj = 0.0;
          for (std::size_t r = 0; r < n; ++r) proj += q(r, i) * q(r, j);
          for (std::size_t r = 0; r < n; ++r) q(r, j) -= proj * q(r, i);
        }
      }
      for (std::size_t r = 0; r < n; ++r) rjj += q(r, j) * q(r, j);
      rjj = std::sqrt(rjj);
      if (rjj == 0.0) {
        for (std::size_t r = 0; r < n; ++r) q(r, j) = rng.normal();
      }
    }
    // Dividing by the positive norm fixes the sign of R's diagonal.
    for (std::size_t r = 0; r < n; ++r) q(r, j) /= rjj;
  }
  return q;
}

Matrix sample_orthogonal(std::size_t n, Rng& rng) { return sample_isometry(n, n, rng); }

Vector sample_unit_vector(std::size_t n, Rng& rng) {
  Vector x(n);
  double s = 0.0;
  do {
    for (double& v : x) v = rng.normal();
    s = norm2(x);
  } while (s == 0.0);
  for (double& v : x) v /= s;
  return x;
}

SpdMatrix sample_spd(std::size_t n, const SpectralBounds& bounds, Rng& rng) {
  Vector lambda(n);
  for (std::size_t i = 0; i < n; ++i) lambda[i] = rng.uniform(bounds.m, bounds.M);
  if (n >= 2) {
    lambda[0] = bounds.m;
    lambda[1] = bounds.M;
  }
  const Matrix q = sample_orthogonal(n, rng);
  return SpdMatrix(congruence(q.transpose(), SymMatrix::diagonal(lambda)));
}

SymMatrix sample_psd(std::size_t n, std::size_t rank, Rng& rng) {
  const Matrix g = sample_gaussian(n, rank, rng);
  return SymMatrix(g * g.transpose());
}

SymMatrix sample_symmetric(std::size_t n, Rng& rng) {
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      a(i, j) = rng.normal();
      a(j, i) = a(i, j);
    }
  return SymMatrix(a);
}

}  // namespace opineq
