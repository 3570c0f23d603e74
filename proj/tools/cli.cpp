#include "cli.hpp"

#include <filesystem>
#include <fstream>

#include "CLI11.hpp"
#include "convexdom/errors.hpp"
#include "convexdom/report_io.hpp"

namespace convexdom::cli {

namespace {

struct RunConfig {
  std::string op = "psi1";
  std::string target = "janowski";
  double A = 1.0, B = -1.0;
  double mu_re = 1.0, mu_im = 0.0;
  double kappa = 1.0;
  double rho1 = 1.0, rho2 = 1.0;
  double x0 = 2.0;
  double alpha = 0.0;
  double beta_re = 1.0, beta_im = 0.0;
  double gamma_re = 0.0, gamma_im = 0.0;
  int n = 1;
  double rmax = 0.95;
  std::size_t rings = 64;
  std::size_t thetas = 256;
  bool grid_given = false;
  std::uint64_t seed = 20240607;
  std::string out_dir = ".";
  std::string suite;
  std::size_t samples = 100;
};

AnalyticTarget target_of(const RunConfig& c) {
  if (c.target == "janowski") return make_janowski(c.A, c.B);
  if (c.target == "exp") return make_exp({c.mu_re, c.mu_im});
  if (c.target == "sqrt") return make_sqrt(c.kappa);
  if (c.target == "sector") return make_sector(c.rho1, c.rho2);
  if (c.target == "halfplane") return make_shifted_halfplane(c.x0);
  throw ValidationError("unknown target '" + c.target +
                        "' (expected janowski, exp, sqrt, sector or halfplane)");
}

ParamSet params_of(const RunConfig& c) {
  ParamSet p;
  p.op = operator_from_string(c.op);
  p.alpha = c.alpha;
  p.beta = {c.beta_re, c.beta_im};
  p.gamma = {c.gamma_re, c.gamma_im};
  p.n = c.n;
  return p;
}

void write_json(const std::filesystem::path& path, const Json& j) {
  std::ofstream f(path);
  if (!f) throw Error("cannot write " + path.string());
  f << j.dump(2) << '\n';
}

void print_checks(const VerificationReport& r, std::ostream& out) {
  for (const auto& c : r.checks) {
    out << to_string(c.status) << "  " << c.name;
    if (!c.relation.empty()) out << "  " << c.value << ' ' << c.relation << ' ' << c.threshold;
    out << '\n';
  }
  for (const auto& s : r.skipped) out << "skipped  " << s << '\n';
}

int cmd_dominant(const RunConfig& c, std::ostream& out) {
  const ParamSet params = params_of(c);
  const AnalyticTarget target = target_of(c);
  const DiskGrid grid = DiskGrid::uniform(c.rmax, c.rings, c.thetas);
  validate(params, target, grid);
  const ConfigurationRun run = verify_configuration(params, target, grid);

  const std::filesystem::path dir(c.out_dir);
  std::filesystem::create_directories(dir);
  {
    std::ofstream f(dir / "q_grid.csv");
    write_grid_csv(run.q, f);
  }
  {
    std::ofstream f(dir / "H_grid.csv");
    write_grid_csv(run.H, f);
  }
  write_json(dir / "dominant.json", {{"params", params_json(params)},
                                     {"target", target_json(target)},
                                     {"q", field_json(run.q)},
                                     {"H", field_json(run.H)},
                                     {"report", report_json(run.report)}});
  print_checks(run.report, out);
  return run.report.passed() ? kExitPass : kExitCheckFailed;
}

int cmd_bound(const RunConfig& c, std::ostream& out) {
  const ParamSet params = params_of(c);
  const AnalyticTarget target = target_of(c);
  auto violations = hypothesis_violations(params, target, DiskGrid::uniform(c.rmax, 16, 64));
  if (!violations.empty()) throw ValidationError(std::move(violations));
  const BoundReport r = bound_report(params, target);

  const std::filesystem::path dir(c.out_dir);
  std::filesystem::create_directories(dir);
  const Json j = bound_json(r);
  write_json(dir / "bound.json", j);
  out << j.dump(2) << '\n';

  const bool have_bound = r.zeta.has_value() || r.xi.has_value();
  const bool min_ok = !r.min_location || r.min_location->at_minus_one;
  return have_bound && min_ok && r.quadrature_lambda_gap < 1e-6 ? kExitPass : kExitCheckFailed;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  // The sampled suites default to a coarser grid than single-configuration runs.
  const DiskGrid grid =
      c.grid_given ? DiskGrid::uniform(c.rmax, c.rings, c.thetas) : DiskGrid::uniform(kInnerRadius, 24, 48);
  VerificationReport r;
  if (c.suite == "examples") {
    r = run_examples_suite(c.grid_given ? grid : DiskGrid::uniform(kInnerRadius, 64, 256));
  } else if (c.suite == "exactness") {
    r = run_exactness_suite(c.samples, c.seed);
  } else if (c.suite == "sharpness") {
    r = run_sharpness_suite();
  } else if (c.suite == "univalence") {
    r = run_univalence_suite(c.samples, c.seed, grid);
  } else if (c.suite == "properties") {
    r = run_property_suite(c.samples, c.seed, grid);
  } else {
    throw ValidationError("unknown suite '" + c.suite +
                          "' (expected examples, exactness, sharpness, univalence or properties)");
  }
  const std::filesystem::path dir(c.out_dir);
  std::filesystem::create_directories(dir);
  write_json(dir / ("verify_" + c.suite + ".json"), report_json(r));
  print_checks(r, out);
  return r.passed() ? kExitPass : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Convex dominants of exact differential subordinations"};
  app.set_config("--config", "", "Key-value config file; command-line flags take precedence");
  app.require_subcommand(1);

  app.add_option("--operator", c.op, "psi1 or psi2")->check(CLI::IsMember({"psi1", "psi2"}));
  app.add_option("--target", c.target, "janowski, exp, sqrt, sector or halfplane");
  app.add_option("--A", c.A, "Janowski A");
  app.add_option("--B", c.B, "Janowski B");
  app.add_option("--mu-re", c.mu_re);
  app.add_option("--mu-im", c.mu_im);
  app.add_option("--kappa", c.kappa);
  app.add_option("--rho1", c.rho1);
  app.add_option("--rho2", c.rho2);
  app.add_option("--x0", c.x0, "Half-plane target parameter");
  app.add_option("--alpha", c.alpha);
  app.add_option("--beta-re", c.beta_re);
  app.add_option("--beta-im", c.beta_im);
  app.add_option("--gamma-re", c.gamma_re);
  app.add_option("--gamma-im", c.gamma_im);
  app.add_option("--n", c.n, "Order of the Hardy class H[a0, n]");
  auto* rmax = app.add_option("--rmax", c.rmax);
  auto* rings = app.add_option("--rings", c.rings);
  auto* thetas = app.add_option("--thetas", c.thetas);
  app.add_option("--seed", c.seed);
  app.add_option("--out", c.out_dir, "Output directory");
  app.add_option("--samples", c.samples);

  auto* dominant = app.add_subcommand("dominant", "Build q and H on a grid and check them");
  auto* bound = app.add_subcommand("bound", "Evaluate the sharp lower bound");
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", c.suite)
      ->required()
      ->check(CLI::IsMember({"examples", "exactness", "sharpness", "univalence", "properties"}));
  for (auto* sub : {dominant, bound, verify}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitValidation;
  }
  c.grid_given = rmax->count() + rings->count() + thetas->count() > 0;

  try {
    if (*dominant) return cmd_dominant(c, out);
    if (*bound) return cmd_bound(c, out);
    return cmd_verify(c, out);
  } catch (const ValidationError& e) {
    err << "invalid configuration:\n";
    for (const auto& v : e.violations()) err << "  - " << v << '\n';
    return kExitValidation;
  } catch (const NumericError& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumeric;
  }
}

}  // namespace convexdom::cli
