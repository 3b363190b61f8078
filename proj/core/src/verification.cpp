#include "ellhyp/verification.hpp"

#include "runner.hpp"

namespace ellhyp {

bool operator==(const ParamPoint& a, const ParamPoint& b) {
  return a.nome.q == b.nome.q && a.nome.p == b.nome.p && a.values == b.values && a.integers == b.integers;
}

VerificationReport check_identity(const Identity& ident, const CheckOptions& options) {
  if (options.trials < 1) throw Error(ErrorKind::InvalidArgument, "trials must be at least 1");
  detail::Stopwatch watch;
  VerificationReport report;
  report.target = ident.id;
  report.kind = "identity";
  report.trials = options.trials;
  report.tol = options.tol;
  report.seed = options.seed;
  report.precision = to_string(options.precision);

  // The sampler does its own redraws, so the trial body never asks for one.
  const detail::Check check{
      ident.id, options.tol,
      [&](Rng& rng) -> std::optional<detail::TrialOutcome> {
        auto sampled = sample_point(ident, rng, options.region);
        const auto value = evaluate_identity(ident, sampled.point, options.precision);
        double err = identity_error(value, ident.rhs_vanishes(sampled.point.integer("n")));
        if (value.alt_rhs) err = std::max(err, static_cast<double>(relative_error(value.rhs, *value.alt_rhs)));
        return detail::TrialOutcome{err, std::move(sampled.point), sampled.resamples};
      },
      ident.id};
  detail::run_checks(report, ident.id, {check}, options.trials, options.seed, 0);
  report.wall_time_ms = watch.elapsed_ms();
  return report;
}

namespace {

/// Compares the right sides of two entries at a point sampled for the first.
detail::Check pair_check(const std::string& name, const std::string& first, const std::string& second, double tol,
                         const CheckOptions& options) {
  const Identity* a = find_identity(first);
  const Identity* b = find_identity(second);
  return {name, tol, [=](Rng& rng) -> std::optional<detail::TrialOutcome> {
            auto sampled = sample_point(*a, rng, options.region);
            ParamPoint other = sampled.point;
            b->solve(other);
            const auto va = evaluate_identity(*a, sampled.point, options.precision);
            const auto vb = evaluate_identity(*b, other, options.precision);
            return detail::TrialOutcome{static_cast<double>(relative_error(va.rhs, vb.rhs)), std::move(other),
                                        sampled.resamples};
          }};
}

/// Overlapping branches of the q/q^3 transformation: n in a residue class
/// admitted by two branches.
detail::Check branch_check(const std::string& name, const std::string& first, const std::string& second, int residue,
                           double tol, const CheckOptions& options) {
  const Identity* a = find_identity(first);
  const Identity* b = find_identity(second);
  return {name, tol, [=](Rng& rng) -> std::optional<detail::TrialOutcome> {
            SamplingRegion region = options.region;
            std::vector<int> ns;
            for (int n : a->admissible_n())
              if (n % 3 == residue) ns.push_back(n);
            region.fixed_n = ns[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(ns.size()) - 1))];
            auto sampled = sample_point(*a, rng, region);
            ParamPoint other = sampled.point;
            b->solve(other);
            const auto va = evaluate_identity(*a, sampled.point, options.precision);
            const auto vb = evaluate_identity(*b, other, options.precision);
            return detail::TrialOutcome{static_cast<double>(relative_error(va.rhs, vb.rhs)), std::move(other),
                                        sampled.resamples};
          }};
}

}  // namespace

VerificationReport cross_check_transform_pairs(const CheckOptions& options) {
  detail::Stopwatch watch;
  VerificationReport report;
  report.target = "transform_pairs";
  report.kind = "suite";
  report.trials = options.trials;
  report.tol = options.tol;
  report.seed = options.seed;
  report.precision = to_string(options.precision);

  const Identity* fa = find_identity("cor_etrafo3_fa");
  std::vector<detail::Check> checks{
      pair_check("quadratic_g_cases", "etrafo_quadratic_gab", "etrafo_quadratic_gae", options.tol, options),
      pair_check("cubic_f_cases", "etrafo2_cubic_fab", "etrafo2_cubic_fae", options.tol, options),
      branch_check("q3_branches_0_1", "etrafo5_b0", "etrafo5_b1", 0, options.tol, options),
      branch_check("q3_branches_0_2", "etrafo5_b0", "etrafo5_b2", 1, options.tol, options),
      branch_check("q3_branches_1_2", "etrafo5_b1", "etrafo5_b2", 2, options.tol, options),
      {"q2_sum_two_forms", options.tol, [=](Rng& rng) -> std::optional<detail::TrialOutcome> {
         auto sampled = sample_point(*fa, rng, options.region);
         const auto v = evaluate_identity(*fa, sampled.point, options.precision);
         return detail::TrialOutcome{static_cast<double>(relative_error(v.rhs, v.alt_rhs.value())),
                                     std::move(sampled.point), sampled.resamples};
       }}};
  detail::run_checks(report, "transform_pairs", checks, options.trials, options.seed, options.region.max_resamples);
  report.wall_time_ms = watch.elapsed_ms();
  return report;
}

}  // namespace ellhyp
