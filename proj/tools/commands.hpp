#pragma once

// Subcommand implementations behind the opineq executable. Each returns the
// process exit code: 0 ok, 1 inequality failure or golden mismatch, 2 bad input.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "opineq/inequalities.hpp"
#include "opineq/suite.hpp"

namespace opineq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInput = 2;

/// Environment variable holding the default relative tolerance.
inline constexpr const char* kToleranceEnv = "OPINEQ_TOL";

/// Flag value if given, else $OPINEQ_TOL, else 1e-9. Throws InputError on a
/// non-positive or unparsable value.
TolerancePolicy resolve_tolerance(std::optional<double> flag);

std::vector<InequalityId> parse_id_list(const std::string& spec);
/// "1-6" or "1,2,4".
std::vector<std::size_t> parse_dims(const std::string& spec);
/// "arithmetic", "geometric", "harmonic" or "power:<t>".
MeanDescriptor parse_mean_spec(const std::string& spec, double nu);

struct ExampleOptions {
  std::string which;
  bool json = false;
};

struct VerifyOptions {
  std::string ids = "ALL";
  std::size_t trials = 1000;
  std::uint64_t seed = 42;
  std::string dims = "1-6";
  std::optional<double> m;
  std::optional<double> M;
  std::vector<double> nu;
  std::vector<double> p;
  std::optional<double> tol;
  std::string alpha_variant = "body";
  double alpha_scale = 1.0;
  unsigned threads = 0;
  bool json = false;
};

struct CheckOptions {
  std::string file;
  std::string id;
  double nu = 0.5;
  double p = 1.0;
  std::optional<double> m;
  std::optional<double> M;
  std::optional<double> m_b;
  std::optional<double> M_b;
  std::string sigma = "arithmetic";
  std::string tau = "geometric";
  std::optional<double> tol;
  std::string alpha_variant = "body";
  bool json = false;
};

struct AlphaOptions {
  double m = 1.0;
  double M = 1.0;
  double p = 1.0;
  std::string alpha_variant = "body";
  bool json = false;
};

struct MeansOptions {
  std::string file;
  std::string kind;
  double nu = 0.5;
  double t = 1.0;
  bool json = false;
};

/// Builds the suite configuration from verify flags (validated).
SampleConfig make_config(const VerifyOptions& opt);

int cmd_example(const ExampleOptions& opt, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err);
int cmd_check(const CheckOptions& opt, std::ostream& out, std::ostream& err);
int cmd_alpha(const AlphaOptions& opt, std::ostream& out, std::ostream& err);
int cmd_means(const MeansOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace opineq::cli
