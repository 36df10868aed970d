#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

using namespace opineq::cli;

int main(int argc, char** argv) {
  CLI::App app{"Numerical verification of reverse AM-GM type operator inequalities"};
  app.require_subcommand(1);

  ExampleOptions ex;
  auto* example = app.add_subcommand("example", "Rebuild a worked example and compare with its printed values");
  example->add_option("which", ex.which, "2.9 or 2.10")->required();
  example->add_flag("--json", ex.json, "JSON output");

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "Run the seeded property suite");
  verify->add_option("--ids", vo.ids, "Comma-separated ids or ALL")->capture_default_str();
  verify->add_option("--trials", vo.trials, "Number of trials")->capture_default_str();
  verify->add_option("--seed", vo.seed, "Master seed")->capture_default_str();
  verify->add_option("--dims", vo.dims, "Dimensions, e.g. 1-6 or 2,3")->capture_default_str();
  verify->add_option("--m", vo.m, "Lower spectral bound (replaces the default bound list)");
  verify->add_option("--M", vo.M, "Upper spectral bound");
  verify->add_option("--nu", vo.nu, "Weights, comma-separated")->delimiter(',');
  verify->add_option("--p", vo.p, "Exponents, comma-separated")->delimiter(',');
  verify->add_option("--tol", vo.tol, "Relative tolerance (default $OPINEQ_TOL or 1e-9)");
  verify->add_option("--alpha-variant", vo.alpha_variant, "body or abstract")->capture_default_str();
  verify->add_option("--alpha-scale", vo.alpha_scale, "Multiply alpha (fault injection)")->capture_default_str();
  verify->add_option("--threads", vo.threads, "Worker threads, 0 = all cores")->capture_default_str();
  verify->add_flag("--json", vo.json, "JSON output");

  CheckOptions co;
  auto* check = app.add_subcommand("check", "Evaluate one inequality on matrices from a JSON file");
  check->add_option("--file", co.file, "JSON file with A, B, map, ...")->required();
  check->add_option("--id", co.id, "Inequality id")->required();
  check->add_option("--nu", co.nu, "Weight")->capture_default_str();
  check->add_option("--p", co.p, "Exponent")->capture_default_str();
  check->add_option("--m", co.m, "Lower spectral bound");
  check->add_option("--M", co.M, "Upper spectral bound");
  check->add_option("--mB", co.m_b, "Lower bound for B (Polya-Szego family)");
  check->add_option("--MB", co.M_b, "Upper bound for B (Polya-Szego family)");
  check->add_option("--sigma", co.sigma, "Mean sigma: arithmetic, geometric, harmonic, power:<t>")->capture_default_str();
  check->add_option("--tau", co.tau, "Mean tau")->capture_default_str();
  check->add_option("--tol", co.tol, "Relative tolerance");
  check->add_option("--alpha-variant", co.alpha_variant, "body or abstract")->capture_default_str();
  check->add_flag("--json", co.json, "JSON output");

  AlphaOptions ao;
  auto* alpha = app.add_subcommand("alpha", "Print the constant alpha(m, M, p)");
  alpha->add_option("--m", ao.m, "Lower bound")->required();
  alpha->add_option("--M", ao.M, "Upper bound")->required();
  alpha->add_option("--p", ao.p, "Exponent")->required();
  alpha->add_option("--alpha-variant", ao.alpha_variant, "body or abstract")->capture_default_str();
  alpha->add_flag("--json", ao.json, "JSON output");

  MeansOptions mo;
  auto* means = app.add_subcommand("means", "Evaluate an operator mean of A and B from a JSON file");
  means->add_option("--file", mo.file, "JSON file with A and B")->required();
  means->add_option("--kind", mo.kind, "arithmetic, geometric, harmonic or power")->required();
  means->add_option("--nu", mo.nu, "Weight")->capture_default_str();
  means->add_option("--t", mo.t, "Power mean exponent")->capture_default_str();
  means->add_flag("--json", mo.json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  if (*example) return cmd_example(ex, std::cout, std::cerr);
  if (*verify) return cmd_verify(vo, std::cout, std::cerr);
  if (*check) return cmd_check(co, std::cout, std::cerr);
  if (*alpha) return cmd_alpha(ao, std::cout, std::cerr);
  return cmd_means(mo, std::cout, std::cerr);
}
