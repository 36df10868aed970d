#pragma once

#include <algorithm>
#include <cmath>

#include "opineq/linalg.hpp"

namespace testing {

inline double max_abs_diff(const opineq::Matrix& a, const opineq::Matrix& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) d = std::max(d, std::abs(a(i, j) - b(i, j)));
  return d;
}

inline double max_abs_diff(const opineq::SymMatrix& a, const opineq::SymMatrix& b) {
  return max_abs_diff(a.matrix(), b.matrix());
}

inline opineq::SymMatrix diag(std::initializer_list<double> d) { return opineq::SymMatrix::diagonal(d); }

}  // namespace testing
