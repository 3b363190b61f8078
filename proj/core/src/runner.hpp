#pragma once

// Trial loop shared by identity checks and property suites.

#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "ellhyp/verification.hpp"

namespace ellhyp::detail {

struct TrialOutcome {
  double err = 0;
  ParamPoint point;
  int resamples = 0;
};

/// One trial; returns nullopt to ask for a redraw (degenerate or badly
/// conditioned point). Non-finite errors, DegenerateParameters,
/// NonzeroRequired and SingularToWorkingPrecision also trigger a redraw.
using TrialBody = std::function<std::optional<TrialOutcome>(Rng&)>;

struct Check {
  std::string name;
  double tol = 1e-8;
  TrialBody body;
  /// Stream name for the random draws; defaults to "<prefix>/<name>".
  std::string stream{};
};

inline bool is_redraw_error(ErrorKind kind) {
  return kind == ErrorKind::DegenerateParameters || kind == ErrorKind::NonzeroRequired ||
         kind == ErrorKind::SingularToWorkingPrecision;
}

inline TrialOutcome run_with_redraws(const TrialBody& body, Rng& rng, int max_resamples) {
  std::string last;
  for (int attempt = 0; attempt <= max_resamples; ++attempt) {
    try {
      if (auto out = body(rng); out && std::isfinite(out->err)) {
        out->resamples += attempt;
        return *out;
      }
      last = "non-finite or ill-conditioned value";
    } catch (const Error& err) {
      if (!is_redraw_error(err.kind())) throw;
      last = err.what();
    }
  }
  throw Error(ErrorKind::SamplingExhausted, "no admissible draw after " + std::to_string(max_resamples) + " redraws (last: " + last + ")");
}

/// Runs every check for `trials` trials on streams (seed, prefix/check, t)
/// and folds the results into `report`.
inline void run_checks(VerificationReport& report, const std::string& prefix, const std::vector<Check>& checks,
                       int trials, std::uint64_t seed, int max_resamples) {
  double total = 0, worst = -1;
  int count = 0;
  for (const auto& check : checks) {
    CheckSummary summary{check.name, trials, check.tol, 0, 0, 0, 0};
    double sum = 0;
    for (int t = 0; t < trials; ++t) {
      const std::string stream = check.stream.empty() ? prefix + "/" + check.name : check.stream;
      Rng rng(seed, stream_id(stream), static_cast<std::uint64_t>(t));
      TrialOutcome out;
      std::string message;
      try {
        out = run_with_redraws(check.body, rng, max_resamples);
      } catch (const Error& err) {
        out.err = std::numeric_limits<double>::infinity();
        message = err.what();
      }
      summary.resamples += out.resamples;
      const bool failed = !(out.err <= check.tol);
      if (std::isfinite(out.err)) {
        sum += out.err;
        summary.max_rel_err = std::max(summary.max_rel_err, out.err);
      } else {
        summary.max_rel_err = std::numeric_limits<double>::infinity();
      }
      if (failed) {
        ++summary.failures;
        report.failures.push_back({check.name, t, out.err, out.point, message.empty() ? "exceeds tolerance" : message});
      }
      if (!(out.err <= worst)) {
        worst = out.err;
        report.worst_point = out.point;
      }
    }
    summary.mean_rel_err = trials > 0 ? sum / trials : 0;
    total += sum;
    count += trials;
    report.max_rel_err = std::max(report.max_rel_err, summary.max_rel_err);
    report.resamples += summary.resamples;
    report.checks.push_back(summary);
  }
  report.mean_rel_err = count > 0 ? total / count : 0;
}

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

/// Records a complex value in a point dump.
inline void dump(ParamPoint& pt, const std::string& name, Complex<long double> z) {
  pt.values[name] = Complex<double>(static_cast<double>(z.real()), static_cast<double>(z.imag()));
}

}  // namespace ellhyp::detail
