#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "ellhyp/catalog.hpp"
#include "ellhyp/verification.hpp"
#include "report_json.hpp"

namespace verify {
namespace {

struct RunArgs {
  std::string identity;
  std::string suite;
  int trials = 100;
  std::uint64_t seed = 1;
  std::optional<double> tol;
  std::vector<double> p_mod;
  std::vector<double> q_mod;
  std::string precision = "double";
  std::string json_path;
  std::optional<int> n;
  std::optional<int> N;
  bool strict_conjecture = false;
  int max_resamples = 100;
};

void print_summary(const ellhyp::VerificationReport& report, std::ostream& out) {
  out << report.kind << " " << report.target << ": " << report.trials << " trials, seed " << report.seed << ", "
      << report.precision << "\n";
  out << std::scientific << std::setprecision(3);
  for (const auto& c : report.checks) {
    out << "  " << std::left << std::setw(44) << c.name << " max " << c.max_rel_err << "  mean " << c.mean_rel_err
        << "  tol " << c.tol << "  failures " << c.failures;
    if (c.resamples > 0) out << "  resamples " << c.resamples;
    out << "\n";
  }
  out << "max_rel_err " << report.max_rel_err << ", mean_rel_err " << report.mean_rel_err << ", resamples "
      << report.resamples << "\n";
  out << std::defaultfloat;
  const std::size_t shown = std::min<std::size_t>(report.failures.size(), 5);
  for (std::size_t i = 0; i < shown; ++i) {
    const auto& f = report.failures[i];
    out << "  FAIL " << f.check << " trial " << f.trial_index << ": " << f.message << " (rel_err " << f.rel_err
        << ")\n";
  }
  if (report.failures.size() > shown) out << "  ... " << report.failures.size() - shown << " more\n";
  if (report.passed())
    out << "PASS\n";
  else if (report.finding)
    out << "FINDING: " << report.failures.size() << " trial(s) disagree; not treated as an error\n";
  else
    out << "FAIL: " << report.failures.size() << " failure(s)\n";
}

ellhyp::SamplingRegion region_from(const RunArgs& args) {
  ellhyp::SamplingRegion region;
  if (!args.p_mod.empty()) {
    region.p_min = args.p_mod[0];
    region.p_max = args.p_mod[1];
  }
  if (!args.q_mod.empty()) {
    region.q_min = args.q_mod[0];
    region.q_max = args.q_mod[1];
  }
  region.max_resamples = args.max_resamples;
  auto check = [](double lo, double hi, const char* what) {
    if (!(lo >= 0 && lo <= hi && hi < 1))
      throw CLI::ValidationError(std::string(what) + " bounds must satisfy 0 <= lo <= hi < 1");
  };
  check(region.p_min, region.p_max, "--p-mod");
  check(region.q_min, region.q_max, "--q-mod");
  return region;
}

int run(const RunArgs& args, std::ostream& out, std::ostream& err) {
  const ellhyp::Precision precision =
      args.precision == "extended" ? ellhyp::Precision::Extended : ellhyp::Precision::Double;
  const ellhyp::SamplingRegion region = region_from(args);

  ellhyp::VerificationReport report;
  if (!args.identity.empty()) {
    const ellhyp::Identity* ident = ellhyp::find_identity(args.identity);
    if (!ident) {
      err << "unknown identity '" << args.identity << "' (see `verify list`)\n";
      return kExitUsage;
    }
    ellhyp::CheckOptions opts;
    opts.trials = args.trials;
    opts.seed = args.seed;
    opts.tol = args.tol.value_or(1e-8);
    opts.precision = precision;
    opts.region = region;
    opts.region.fixed_n = args.n;
    report = ellhyp::check_identity(*ident, opts);
  } else {
    ellhyp::SuiteOptions opts;
    opts.trials = args.trials;
    opts.seed = args.seed;
    opts.tol = args.tol;
    opts.precision = precision;
    opts.region = region;
    if (args.n) opts.n = *args.n;
    if (args.N) opts.N = *args.N;
    opts.strict_conjecture = args.strict_conjecture;
    report = ellhyp::run_suite(args.suite, opts);
  }

  print_summary(report, out);
  if (!args.json_path.empty()) {
    std::ofstream file(args.json_path, std::ios::binary);
    if (!file) {
      err << "cannot write " << args.json_path << "\n";
      return kExitUsage;
    }
    file << dump_report(report);
  }
  return report.passed() || report.finding ? kExitOk : kExitFailures;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Randomized numerical verification of elliptic hypergeometric identities", "verify"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "List catalog identities and property suites");

  RunArgs run_args;
  auto* run_cmd = app.add_subcommand("run", "Run a catalog identity or a property suite");
  auto* identity = run_cmd->add_option("--identity", run_args.identity, "Catalog identity id");
  auto* suite = run_cmd->add_option("--suite", run_args.suite, "Property suite")
                    ->check(CLI::IsMember(ellhyp::suite_names()));
  identity->excludes(suite);
  run_cmd->add_option("--trials", run_args.trials, "Trials per check")->check(CLI::PositiveNumber)->capture_default_str();
  run_cmd->add_option("--seed", run_args.seed, "Base seed")->capture_default_str();
  run_cmd->add_option("--tol", run_args.tol, "Relative tolerance (default 1e-8; suites use per-check tolerances)")
      ->check(CLI::NonNegativeNumber);
  run_cmd->add_option("--p-mod", run_args.p_mod, "Bounds on |p|: LO HI")->expected(2);
  run_cmd->add_option("--q-mod", run_args.q_mod, "Bounds on |q|: LO HI")->expected(2);
  run_cmd->add_option("--precision", run_args.precision, "Working precision")
      ->check(CLI::IsMember({"double", "extended"}))
      ->capture_default_str();
  run_cmd->add_option("--json", run_args.json_path, "Write a JSON report to this path");
  run_cmd->add_option("--n", run_args.n, "Termination index (identities) or rank (conjecture suite)");
  run_cmd->add_option("--N", run_args.N, "Termination bound of the conjecture suite");
  run_cmd->add_flag("--strict-conjecture", run_args.strict_conjecture,
                    "Treat conjecture disagreements as failures");
  run_cmd->add_option("--max-resamples", run_args.max_resamples, "Redraw budget per trial")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  std::vector<std::string> argv_store{"verify"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (*run_cmd && run_args.identity.empty() && run_args.suite.empty())
      throw CLI::RequiredError("--identity or --suite");
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*list) {
      for (const auto& ident : ellhyp::list_identities()) out << ident.id << "\t" << ident.description << "\n";
      for (const auto& name : ellhyp::suite_names()) out << name << "\tsuite\n";
      return kExitOk;
    }
    return run(run_args, out, err);
  } catch (const CLI::ValidationError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const ellhyp::Error& e) {
    err << e.what() << "\n";
    return e.kind() == ellhyp::ErrorKind::InvalidArgument ? kExitUsage : kExitFailures;
  }
}

}  // namespace verify
