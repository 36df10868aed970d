#include "opineq/json_io.hpp"

#include <cmath>
#include <fstream>

namespace opineq {

namespace {

double number(const json& j, const std::string& what) {
  if (!j.is_number()) throw InputError(what + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw InputError(what + " must be finite");
  return v;
}

std::size_t count(const json& j, const std::string& what) {
  if (!j.is_number_integer() || j.get<long long>() < 1) throw InputError(what + " must be a positive integer");
  return j.get<std::size_t>();
}

const json& field(const json& j, const char* key, const std::string& what) {
  if (!j.is_object() || !j.contains(key)) throw InputError(what + " is missing \"" + key + "\"");
  return j.at(key);
}

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json value_json(const ReportValue& v) {
  if (const auto* d = std::get_if<double>(&v)) return *d;
  return to_json(std::get<SymMatrix>(v));
}

}  // namespace

json to_json(const Matrix& x) {
  json rows = json::array();
  for (std::size_t i = 0; i < x.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < x.cols(); ++j) row.push_back(x(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const SymMatrix& x) { return {{"n", x.dim()}, {"data", to_json(x.matrix())}}; }

Matrix matrix_from_json(const json& j, const std::string& what) {
  if (!j.is_array() || j.empty()) throw InputError(what + " must be a nonempty list of rows");
  const std::size_t cols = j.front().is_array() ? j.front().size() : 0;
  if (cols == 0) throw InputError(what + " rows must be nonempty lists");
  Matrix m(j.size(), cols);
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw InputError(what + " rows must have equal length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = number(j[r][c], what + " entry");
  }
  return m;
}

SymMatrix sym_from_json(const json& j, const std::string& what) {
  const json& data = j.is_object() ? field(j, "data", what) : j;
  const Matrix m = matrix_from_json(data, what);
  if (!m.square()) throw InputError(what + " must be square");
  if (j.is_object() && j.contains("n") && count(j.at("n"), what + ".n") != m.rows()) {
    throw InputError(what + ": \"n\" does not match the data");
  }
  if ((m - m.transpose()).frobenius_norm() > 1e-8 * m.frobenius_norm()) {
    throw InputError(what + " is not symmetric");
  }
  return SymMatrix(m);
}

Vector vector_from_json(const json& j, const std::string& what) {
  if (!j.is_array() || j.empty()) throw InputError(what + " must be a nonempty list of numbers");
  Vector v;
  for (const auto& e : j) v.push_back(number(e, what + " entry"));
  return v;
}

json to_json(const PositiveUnitalMap& phi) {
  json j{{"variant", to_string(phi.variant())}};
  switch (phi.variant()) {
    case MapVariant::identity:
    case MapVariant::normalized_trace:
      j["n"] = phi.input_dim();
      break;
    case MapVariant::isometry_congruence:
      j["T"] = to_json(phi.congruence_matrix());
      break;
    case MapVariant::block_average:
      j["n_blocks"] = phi.n_blocks();
      j["block_dim"] = phi.output_dim();
      break;
    case MapVariant::convex_combination: {
      json terms = json::array();
      for (const auto& t : phi.terms()) terms.push_back({{"weight", t.weight}, {"map", to_json(t.map)}});
      j["terms"] = std::move(terms);
      break;
    }
  }
  return j;
}

PositiveUnitalMap map_from_json(const json& j) {
  const json& v = field(j, "variant", "map");
  if (!v.is_string()) throw InputError("map variant must be a string");
  const std::string variant = v.get<std::string>();
  if (variant == "identity") return PositiveUnitalMap::identity(count(field(j, "n", "map"), "map.n"));
  if (variant == "normalized_trace") return PositiveUnitalMap::normalized_trace(count(field(j, "n", "map"), "map.n"));
  if (variant == "isometry_congruence") {
    return PositiveUnitalMap::isometry_congruence(matrix_from_json(field(j, "T", "map"), "map.T"));
  }
  if (variant == "block_average") {
    return PositiveUnitalMap::block_average(count(field(j, "n_blocks", "map"), "map.n_blocks"),
                                            count(field(j, "block_dim", "map"), "map.block_dim"));
  }
  if (variant == "convex_combination") {
    const json& terms = field(j, "terms", "map");
    if (!terms.is_array()) throw InputError("map.terms must be a list");
    std::vector<PositiveUnitalMap::Term> out;
    for (const auto& t : terms) {
      out.push_back({number(field(t, "weight", "map term"), "map term weight"), map_from_json(field(t, "map", "map term"))});
    }
    return PositiveUnitalMap::convex_combination(std::move(out));
  }
  throw InputError("unknown map variant '" + variant + "'");
}

json to_json(const InequalityReport& r) {
  json params = json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  return {{"id", std::string(to_string(r.id))},
          {"holds", r.holds},
          {"gap", r.gap},
          {"tolerance", r.tolerance},
          {"alpha", optional_number(r.alpha_used)},
          {"params", std::move(params)},
          {"lhs", value_json(r.lhs)},
          {"rhs", value_json(r.rhs)}};
}

json to_json(const SuiteReport& r) {
  const SampleConfig& c = r.config;
  json bounds = json::array();
  for (const auto& b : c.bounds) bounds.push_back({b.m, b.M});
  json cfg{{"seed", c.seed},
           {"trials", c.trials},
           {"dims", c.dims},
           {"bounds", std::move(bounds)},
           {"nu_grid", c.nu_grid},
           {"p_grid", c.p_grid},
           {"tolerance_rel", c.tolerance.rel},
           {"tolerance_abs", optional_number(c.tolerance.abs)},
           {"alpha_variant", std::string(to_string(c.alpha_variant))},
           {"alpha_scale", c.alpha_scale}};

  json ids = json::array();
  for (const auto& s : r.ids) {
    json e{{"id", std::string(to_string(s.id))},
           {"passed", s.passed},
           {"failed", s.failed},
           {"rejected", s.rejected},
           {"numerical_errors", s.numerical_errors},
           {"worst_relative_gap", optional_number(s.worst_relative_gap)},
           {"worst_gap", optional_number(s.worst_gap)},
           {"worst_trial", s.worst_trial ? json(*s.worst_trial) : json(nullptr)}};
    if (s.first_failure) {
      const FailureInfo& f = *s.first_failure;
      e["first_failure"] = {{"trial", f.trial}, {"dim", f.dim}, {"nu", f.nu}, {"p", f.p},
                            {"m", f.m},         {"M", f.M},     {"gap", f.gap}, {"message", f.message}};
    }
    ids.push_back(std::move(e));
  }
  return {{"seed", c.seed}, {"config", std::move(cfg)}, {"total_failures", r.total_failures()}, {"results", std::move(ids)}};
}

CheckFile parse_check_file(const json& j) {
  if (!j.is_object()) throw InputError("check file must be a JSON object");
  CheckFile f;
  if (j.contains("A")) f.a = sym_from_json(j.at("A"), "A");
  if (j.contains("B")) f.b = sym_from_json(j.at("B"), "B");
  if (j.contains("map")) f.map = map_from_json(j.at("map"));
  if (j.contains("x")) f.x = vector_from_json(j.at("x"), "x");
  auto blocks = [&](const char* key, std::vector<SymMatrix>& out) {
    if (!j.contains(key)) return;
    const json& list = j.at(key);
    if (!list.is_array()) throw InputError(std::string(key) + " must be a list of matrices");
    for (std::size_t i = 0; i < list.size(); ++i) out.push_back(sym_from_json(list[i], std::string(key) + "[" + std::to_string(i) + "]"));
  };
  blocks("blocks_A", f.blocks_a);
  blocks("blocks_B", f.blocks_b);
  if (j.contains("a")) f.scalar_a = number(j.at("a"), "a");
  if (j.contains("b")) f.scalar_b = number(j.at("b"), "b");
  if (j.contains("lemma_c")) f.lemma_constant = number(j.at("lemma_c"), "lemma_c");
  return f;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("invalid JSON in '" + path + "': " + e.what());
  }
}

}  // namespace opineq
