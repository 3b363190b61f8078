#pragma once

// Catalog of summation and transformation identities. Each entry knows its
// free parameters, how to solve the constrained ones, which termination
// indices are admissible, and how to evaluate both sides independently.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ellhyp/kernel.hpp"
#include "ellhyp/numeric.hpp"
#include "ellhyp/rng.hpp"

namespace ellhyp {

/// A sampled parameter point. `values` holds free and solved parameters;
/// only the free ones are read back when evaluating, solved ones are
/// recomputed in the working precision.
struct ParamPoint {
  Nome<double> nome{};
  std::map<std::string, Complex<double>> values;
  std::map<std::string, int> integers;

  Complex<double> at(const std::string& name) const;
  int integer(const std::string& name) const;
};

/// Result of evaluating an identity at one point.
template <std::floating_point R>
struct IdentityValue {
  Complex<R> lhs;
  Complex<R> rhs;
  /// Largest |summand| of the left side; the scale for zero tests.
  R lhs_max_term{0};
  /// sum |summand| / |sum| of the left side.
  R lhs_condition{1};
  /// A second closed form for the same right side, where one exists.
  std::optional<Complex<R>> alt_rhs;
};

struct Identity {
  std::string id;
  std::string description;
  std::vector<std::string> free_params;
  std::vector<std::string> solved_params;
  std::string termination = "n";
  int n_min = 0;
  int n_max = 0;
  /// Nonzero for entries with a fixed stretch r of the base.
  int stretch = 0;
  /// The entry uses a second free base named "r".
  bool second_base = false;
  /// Admissible termination indices (case splits by residue class).
  std::function<bool(int)> branch = [](int) { return true; };
  /// The right side is identically zero at this n.
  std::function<bool(int)> rhs_vanishes = [](int) { return false; };

  /// Fills the solved parameters of `point` (double precision, for reports).
  std::function<void(ParamPoint&)> solve;
  std::function<IdentityValue<double>(const ParamPoint&)> eval_double;
  std::function<IdentityValue<long double>(const ParamPoint&)> eval_extended;

  /// Largest constraint residual among solved parameters at `point`.
  std::function<double(const ParamPoint&)> constraint_residual;

  std::vector<int> admissible_n() const;
};

/// All catalog entries in a stable order.
const std::vector<Identity>& list_identities();

/// nullptr if unknown.
const Identity* find_identity(const std::string& id);

struct SamplingRegion {
  double param_min = 0.5, param_max = 2.0;
  double q_min = 0.3, q_max = 0.8;
  double p_min = 0.05, p_max = 0.3;
  /// Second base r of the two-base sums; sampled like q by default.
  double r_min = 0.3, r_max = 0.8;
  int max_resamples = 100;
  /// Points whose left side has sum|t|/|sum t| above this are redrawn, and so
  /// are points whose double right side is off by more than max_condition * eps.
  double max_condition = 1e6;
  /// Restrict the termination index; ignored when outside the entry's range.
  std::optional<int> fixed_n;
};

struct SampledPoint {
  ParamPoint point;
  int resamples = 0;
};

/// Draws a point from `rng`, solving constraints and redrawing on degenerate
/// parameters, non-finite values or ill-conditioned left sides. Throws
/// SamplingExhausted after region.max_resamples redraws.
SampledPoint sample_point(const Identity& ident, Rng& rng, const SamplingRegion& region = {});

/// Convenience: the stream for trial 0 of `seed`.
SampledPoint sample_point(const Identity& ident, std::uint64_t seed, const SamplingRegion& region = {});

/// Error measure of one evaluation: relative error of the two sides, or
/// |lhs| / max|summand| when the right side vanishes identically.
template <std::floating_point R>
double identity_error(const IdentityValue<R>& value, bool rhs_vanishes) {
  if (rhs_vanishes) {
    if (value.lhs_max_term == R(0)) return 0.0;
    return static_cast<double>(std::abs(value.lhs) / value.lhs_max_term);
  }
  return static_cast<double>(relative_error(value.lhs, value.rhs));
}

/// Evaluates the entry at the given precision.
IdentityValue<long double> evaluate_identity(const Identity& ident, const ParamPoint& point, Precision precision);

}  // namespace ellhyp
