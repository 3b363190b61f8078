#pragma once

// Randomized verification runs over catalog identities and module property
// suites, summarized in a VerificationReport.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ellhyp/catalog.hpp"
#include "ellhyp/numeric.hpp"

namespace ellhyp {

struct TrialFailure {
  std::string check;
  int trial_index = 0;
  /// Non-finite when the trial raised an error instead of producing a value.
  double rel_err = 0;
  ParamPoint point;
  std::string message;

  friend bool operator==(const TrialFailure&, const TrialFailure&) = default;
};

/// Per-property statistics inside a report.
struct CheckSummary {
  std::string name;
  int trials = 0;
  double tol = 0;
  double max_rel_err = 0;
  double mean_rel_err = 0;
  int failures = 0;
  int resamples = 0;

  friend bool operator==(const CheckSummary&, const CheckSummary&) = default;
};

struct VerificationReport {
  static constexpr int kSchema = 1;

  std::string target;         // identity id or suite name
  std::string kind;           // "identity" or "suite"
  int trials = 0;
  double tol = 0;
  std::uint64_t seed = 0;
  std::string precision = "double";
  std::string rng{kRngAlgorithm};
  double max_rel_err = 0;
  double mean_rel_err = 0;
  int resamples = 0;
  std::vector<TrialFailure> failures;
  std::optional<ParamPoint> worst_point;
  std::vector<CheckSummary> checks;
  /// Failures are numerical evidence against a conjecture rather than
  /// defects; callers may choose not to treat them as errors.
  bool finding = false;
  double wall_time_ms = 0;

  bool passed() const { return failures.empty(); }
};

bool operator==(const ParamPoint& a, const ParamPoint& b);

struct CheckOptions {
  int trials = 100;
  double tol = 1e-8;
  std::uint64_t seed = 1;
  Precision precision = Precision::Double;
  SamplingRegion region{};
};

/// Runs `trials` independent trials of one identity. Trial t draws from the
/// stream (seed, id, t), so results do not depend on scheduling.
VerificationReport check_identity(const Identity& ident, const CheckOptions& options = {});

/// Agreement of the alternative closed forms at shared points: the two
/// g-cases of the quadratic transformation, the two f-cases of the cubic one,
/// overlapping branches of the q/q^3 transformation, and the two right sides
/// of the q/q^2 summation at f = a.
VerificationReport cross_check_transform_pairs(const CheckOptions& options = {});

struct SuiteOptions {
  int trials = 100;
  /// Overrides the per-check tolerances when set.
  std::optional<double> tol;
  std::uint64_t seed = 1;
  Precision precision = Precision::Double;
  SamplingRegion region{};
  /// Dimension and termination bound for the conjecture suite.
  int n = 2;
  int N = 2;
  /// Treat conjecture failures as errors instead of findings.
  bool strict_conjecture = false;
};

const std::vector<std::string>& suite_names();

/// Throws InvalidArgument for an unknown suite name.
VerificationReport run_suite(const std::string& name, const SuiteOptions& options = {});

}  // namespace ellhyp
