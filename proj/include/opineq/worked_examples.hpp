#pragma once

// The two published worked examples of the refined reverse AM-GM inequality,
// rebuilt from their exact inputs and compared with the printed numbers.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "opineq/linalg.hpp"

namespace opineq {

struct GoldenEntry {
  std::string name;
  double computed;
  double expected;
  double tol;
  /// Asserted entries decide the example's exit status; the rest are reported.
  bool asserted;
  /// For a positivity check: passed iff computed > expected (tol unused).
  bool lower_bound = false;
  bool passed = false;

  double deviation() const { return computed - expected; }
};

struct WorkedExample {
  std::string name;
  std::vector<std::pair<std::string, SymMatrix>> matrices;
  std::vector<GoldenEntry> entries;
  std::vector<std::string> notes;

  bool passed() const;
};

/// A, B 2x2, Phi = normalized trace, m = 1, M = 3, nu = 1/2, p = 3.
WorkedExample example_2_9();
/// A, B 2x2, Phi(X) = T^T X T for a rotation T, m = 3, M = 7, nu = 1/2, p = 5/3.
WorkedExample example_2_10();
/// "2.9" or "2.10"; throws InputError otherwise.
WorkedExample worked_example(std::string_view which);

}  // namespace opineq
