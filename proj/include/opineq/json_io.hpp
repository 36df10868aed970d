#pragma once

// JSON encoding of matrices, maps, reports and suite results.
//
// Matrix:  {"n": 2, "data": [[a, b], [b, c]]}
// Map:     {"variant": "identity", "n": 3}
//          {"variant": "normalized_trace", "n": 3}
//          {"variant": "isometry_congruence", "T": [[...], ...]}   (n x k, row-major)
//          {"variant": "block_average", "n_blocks": 2, "block_dim": 2}
//          {"variant": "convex_combination", "terms": [{"weight": w, "map": {...}}, ...]}

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "opineq/inequalities.hpp"
#include "opineq/suite.hpp"

namespace opineq {

using json = nlohmann::json;

json to_json(const Matrix& x);
json to_json(const SymMatrix& x);

/// Reads a square matrix, rejecting ||X - X^T||_F > 1e-8 ||X||_F with a
/// "not symmetric" InputError; the result is the symmetrized (X + X^T)/2.
SymMatrix sym_from_json(const json& j, const std::string& what = "matrix");
/// Rows of numbers, any shape.
Matrix matrix_from_json(const json& j, const std::string& what = "matrix");
Vector vector_from_json(const json& j, const std::string& what = "vector");

json to_json(const PositiveUnitalMap& phi);
PositiveUnitalMap map_from_json(const json& j);

json to_json(const InequalityReport& r);
json to_json(const SuiteReport& r);

/// Contents of a `check --file` document. Keys: A, B (matrices), map, x,
/// blocks_A, blocks_B (lists of matrices), a, b (scalars), lemma_c.
struct CheckFile {
  std::optional<SymMatrix> a;
  std::optional<SymMatrix> b;
  std::optional<PositiveUnitalMap> map;
  std::optional<Vector> x;
  std::vector<SymMatrix> blocks_a;
  std::vector<SymMatrix> blocks_b;
  std::optional<double> scalar_a;
  std::optional<double> scalar_b;
  std::optional<double> lemma_constant;
};

CheckFile parse_check_file(const json& j);
/// Throws InputError if the file cannot be read or parsed.
json read_json_file(const std::string& path);

}  // namespace opineq
