#include "commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "opineq/json_io.hpp"
#include "opineq/worked_examples.hpp"

namespace opineq::cli {

namespace {

double parse_double(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw InputError(what + ": cannot parse '" + s + "'");
  }
  if (used != s.size()) throw InputError(what + ": cannot parse '" + s + "'");
  return v;
}

std::size_t parse_size(const std::string& s, const std::string& what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw InputError(what + ": expected a positive integer, got '" + s + "'");
  }
  return std::stoul(s);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

void print_matrix(std::ostream& out, const std::string& label, const SymMatrix& x) {
  out << label << ":\n";
  for (std::size_t i = 0; i < x.dim(); ++i) {
    out << "  [";
    for (std::size_t j = 0; j < x.dim(); ++j) out << (j ? " " : "") << std::setw(12) << x(i, j);
    out << " ]\n";
  }
}

void print_value(std::ostream& out, const std::string& label, const ReportValue& v) {
  if (const auto* d = std::get_if<double>(&v)) {
    out << label << ": " << *d << "\n";
  } else {
    print_matrix(out, label, std::get<SymMatrix>(v));
  }
}

SpectralBounds pair_bounds(const std::optional<double>& m, const std::optional<double>& M, const char* what) {
  if (m.has_value() != M.has_value()) throw InputError(std::string(what) + " requires both lower and upper bounds");
  return {*m, *M};
}

// Smallest interval containing every spectrum.
SpectralBounds enclosing(std::initializer_list<const std::vector<SpdMatrix>*> groups) {
  double lo = 0.0;
  double hi = 0.0;
  bool any = false;
  for (const auto* g : groups)
    for (const auto& x : *g) {
      lo = any ? std::min(lo, x.lambda_min()) : x.lambda_min();
      hi = any ? std::max(hi, x.lambda_max()) : x.lambda_max();
      any = true;
    }
  if (!any) return {1.0, 1.0};
  return {lo, hi};
}

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace

TolerancePolicy resolve_tolerance(std::optional<double> flag) {
  TolerancePolicy tol;
  if (flag) {
    tol.rel = *flag;
  } else if (const char* env = std::getenv(kToleranceEnv); env && *env) {
    tol.rel = parse_double(env, kToleranceEnv);
  }
  if (!(tol.rel > 0.0)) throw InputError("tolerance must be positive");
  return tol;
}

std::vector<InequalityId> parse_id_list(const std::string& spec) {
  if (spec == "ALL") {
    const auto all = all_inequality_ids();
    return {all.begin(), all.end()};
  }
  std::vector<InequalityId> ids;
  for (const auto& name : split(spec, ',')) ids.push_back(parse_inequality_id(name));
  if (ids.empty()) throw InputError("no inequality ids given");
  return ids;
}

std::vector<std::size_t> parse_dims(const std::string& spec) {
  std::vector<std::size_t> dims;
  for (const auto& part : split(spec, ',')) {
    const auto dash = part.find('-');
    if (dash == std::string::npos) {
      dims.push_back(parse_size(part, "--dims"));
      continue;
    }
    const std::size_t lo = parse_size(part.substr(0, dash), "--dims");
    const std::size_t hi = parse_size(part.substr(dash + 1), "--dims");
    if (lo > hi) throw InputError("--dims: empty range '" + part + "'");
    for (std::size_t d = lo; d <= hi; ++d) dims.push_back(d);
  }
  if (dims.empty()) throw InputError("--dims must list at least one dimension");
  for (const auto d : dims)
    if (d == 0 || d > 64) throw InputError("--dims values must lie in 1..64");
  return dims;
}

MeanDescriptor parse_mean_spec(const std::string& spec, double nu) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) {
    if (spec == "power") throw InputError("power mean needs an exponent, e.g. power:0.5");
    return parse_mean(spec, nu, 1.0);
  }
  if (spec.substr(0, colon) != "power") throw InputError("only the power mean takes an exponent");
  return MeanDescriptor::power(nu, parse_double(spec.substr(colon + 1), "power mean exponent"));
}

SampleConfig make_config(const VerifyOptions& opt) {
  SampleConfig c;
  c.trials = opt.trials;
  c.seed = opt.seed;
  c.dims = parse_dims(opt.dims);
  if (opt.m || opt.M) c.bounds = {pair_bounds(opt.m, opt.M, "--m/--M")};
  if (!opt.nu.empty()) c.nu_grid = opt.nu;
  if (!opt.p.empty()) c.p_grid = opt.p;
  c.tolerance = resolve_tolerance(opt.tol);
  c.alpha_variant = parse_alpha_variant(opt.alpha_variant);
  c.alpha_scale = opt.alpha_scale;
  c.threads = opt.threads;
  c.validate();
  return c;
}

int cmd_example(const ExampleOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const WorkedExample ex = worked_example(opt.which);
    if (opt.json) {
      json matrices = json::object();
      for (const auto& [name, m] : ex.matrices) matrices[name] = to_json(m);
      json entries = json::array();
      for (const auto& e : ex.entries) {
        entries.push_back({{"name", e.name},
                           {"computed", e.computed},
                           {"expected", e.expected},
                           {"deviation", e.deviation()},
                           {"tol", e.tol},
                           {"check", e.lower_bound ? "positive" : "within"},
                           {"asserted", e.asserted},
                           {"passed", e.passed}});
      }
      out << json{{"example", ex.name}, {"passed", ex.passed()}, {"matrices", matrices}, {"entries", entries},
                  {"notes", ex.notes}}
                 .dump(2)
          << "\n";
    } else {
      out << "example " << ex.name << "\n" << std::setprecision(6) << std::fixed;
      for (const auto& [name, m] : ex.matrices) print_matrix(out, name, m);
      out << "\n" << std::left << std::setw(34) << "quantity" << std::right << std::setw(12) << "computed"
          << std::setw(12) << "expected" << std::setw(12) << "deviation" << std::setw(12) << "tol"
          << "  status\n";
      for (const auto& e : ex.entries) {
        out << std::left << std::setw(34) << e.name << std::right << std::setw(12) << e.computed;
        if (e.lower_bound) {
          out << std::setw(12) << "> 0" << std::setw(12) << "" << std::setw(12) << "";
        } else {
          out << std::setw(12) << e.expected << std::setw(12) << e.deviation() << std::setw(12)
              << std::setprecision(1) << std::scientific << e.tol << std::fixed << std::setprecision(6);
        }
        out << "  " << (e.passed ? "ok" : "MISMATCH") << (e.asserted ? "" : " (reported)") << "\n";
      }
      for (const auto& n : ex.notes) out << "note: " << n << "\n";
      out << (ex.passed() ? "all golden values matched\n" : "golden mismatch\n");
    }
    return ex.passed() ? kExitOk : kExitFailure;
  });
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const SampleConfig config = make_config(opt);
    const auto ids = parse_id_list(opt.ids);
    const SuiteReport rep = run_suite(config, ids);
    if (opt.json) {
      out << to_json(rep).dump(2) << "\n";
    } else {
      out << "seed " << config.seed << ", " << config.trials << " trials\n";
      out << std::left << std::setw(14) << "id" << std::right << std::setw(8) << "passed" << std::setw(8) << "failed"
          << std::setw(10) << "rejected" << std::setw(10) << "numeric" << std::setw(16) << "worst rel gap\n";
      for (const auto& s : rep.ids) {
        out << std::left << std::setw(14) << to_string(s.id) << std::right << std::setw(8) << s.passed
            << std::setw(8) << s.failed << std::setw(10) << s.rejected << std::setw(10) << s.numerical_errors
            << std::setw(15);
        if (s.worst_relative_gap) {
          out << std::setprecision(3) << std::scientific << *s.worst_relative_gap << std::defaultfloat;
        } else {
          out << "-";
        }
        out << "\n";
        if (s.first_failure) {
          const auto& f = *s.first_failure;
          out << "    first failure: trial " << f.trial << " dim " << f.dim << " nu " << f.nu << " p " << f.p
              << " [" << f.m << ", " << f.M << "] gap " << f.gap;
          if (!f.message.empty()) out << " (" << f.message << ")";
          out << "\n";
        }
      }
      out << "total failures: " << rep.total_failures() << "\n";
    }
    return rep.total_failures() == 0 ? kExitOk : kExitFailure;
  });
}

int cmd_check(const CheckOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const InequalityId id = parse_inequality_id(opt.id);
    const CheckFile file = parse_check_file(read_json_file(opt.file));

    CheckInputs in;
    if (file.a) in.a = SpdMatrix(*file.a);
    if (file.b) in.b = SpdMatrix(*file.b);
    in.x = file.x;
    in.scalar_a = file.scalar_a;
    in.scalar_b = file.scalar_b;
    in.lemma_constant = file.lemma_constant;
    for (const auto& x : file.blocks_a) in.blocks_a.emplace_back(x);
    for (const auto& x : file.blocks_b) in.blocks_b.emplace_back(x);

    VerifierParams params;
    params.nu = opt.nu;
    params.p = opt.p;
    params.sigma = parse_mean_spec(opt.sigma, opt.nu);
    params.tau = parse_mean_spec(opt.tau, opt.nu);
    params.map = file.map;
    params.tolerance = resolve_tolerance(opt.tol);
    params.alpha_variant = parse_alpha_variant(opt.alpha_variant);

    // Without explicit bounds use the tightest ones the inputs allow.
    std::vector<SpdMatrix> as = in.blocks_a;
    std::vector<SpdMatrix> bs = in.blocks_b;
    if (in.a) as.push_back(*in.a);
    if (in.b) bs.push_back(*in.b);
    const bool split_b = opt.m_b || opt.M_b;
    if (opt.m || opt.M) {
      params.bounds = pair_bounds(opt.m, opt.M, "--m/--M");
    } else {
      params.bounds = split_b ? enclosing({&as}) : enclosing({&as, &bs});
    }
    if (split_b) params.bounds_b = pair_bounds(opt.m_b, opt.M_b, "--mB/--MB");

    const InequalityReport rep = check(id, params, in);
    if (opt.json) {
      out << to_json(rep).dump(2) << "\n";
    } else {
      out << to_string(rep.id) << ": " << describe(rep.id) << "\n" << std::setprecision(10);
      print_value(out, "lhs", rep.lhs);
      print_value(out, "rhs", rep.rhs);
      out << "gap: " << rep.gap << "\ntolerance: " << rep.tolerance << "\n";
      if (rep.alpha_used) out << "constant: " << *rep.alpha_used << "\n";
      out << (rep.holds ? "holds" : "FAILS") << "\n";
    }
    return rep.holds ? kExitOk : kExitFailure;
  });
}

int cmd_alpha(const AlphaOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const SpectralBounds b{opt.m, opt.M};
    const AlphaVariant v = parse_alpha_variant(opt.alpha_variant);
    const auto br = alpha_branches(b, opt.p, v);
    const double a = std::max(br[0], br[1]);
    if (opt.json) {
      out << json{{"m", b.m}, {"M", b.M}, {"p", opt.p}, {"variant", std::string(to_string(v))},
                  {"alpha", a}, {"branches", br}, {"kantorovich", kantorovich_constant(b)}}
                 .dump(2)
          << "\n";
    } else {
      out << std::setprecision(12) << "alpha = " << a << "\n"
          << "branches: " << br[0] << ", " << br[1] << " (" << to_string(v) << ")\n";
    }
    return kExitOk;
  });
}

int cmd_means(const MeansOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const CheckFile file = parse_check_file(read_json_file(opt.file));
    if (!file.a || !file.b) throw InputError("means needs matrices A and B in the file");
    const MeanDescriptor mean = parse_mean(opt.kind, opt.nu, opt.t);
    const SymMatrix result = mean.apply(SpdMatrix(*file.a), SpdMatrix(*file.b));
    if (opt.json) {
      out << json{{"kind", mean.name()}, {"nu", mean.nu()}, {"result", to_json(result)}}.dump(2) << "\n";
    } else {
      out << std::setprecision(10);
      print_matrix(out, mean.name() + " mean, nu = " + std::to_string(mean.nu()), result);
    }
    return kExitOk;
  });
}

}  // namespace opineq::cli
