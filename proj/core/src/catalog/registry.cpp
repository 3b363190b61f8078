#include <algorithm>
#include <limits>

#include "support.hpp"

namespace ellhyp {

Complex<double> ParamPoint::at(const std::string& name) const {
  const auto it = values.find(name);
  if (it == values.end()) throw Error(ErrorKind::InvalidArgument, "parameter '" + name + "' missing from point");
  return it->second;
}

int ParamPoint::integer(const std::string& name) const {
  const auto it = integers.find(name);
  if (it == integers.end()) throw Error(ErrorKind::InvalidArgument, "integer '" + name + "' missing from point");
  return it->second;
}

std::vector<int> Identity::admissible_n() const {
  std::vector<int> out;
  for (int n = n_min; n <= n_max; ++n)
    if (branch(n)) out.push_back(n);
  return out;
}

const std::vector<Identity>& list_identities() {
  static const std::vector<Identity> catalog = [] {
    std::vector<Identity> out;
    catalog::register_basic(out);
    catalog::register_quadratic_cubic(out);
    catalog::register_higher(out);
    return out;
  }();
  return catalog;
}

const Identity* find_identity(const std::string& id) {
  const auto& all = list_identities();
  const auto it = std::find_if(all.begin(), all.end(), [&](const Identity& ident) { return ident.id == id; });
  return it == all.end() ? nullptr : &*it;
}

namespace {

ParamPoint draw(const Identity& ident, Rng& rng, const SamplingRegion& region, const std::vector<int>& ns) {
  ParamPoint pt;
  pt.nome.q = rng.polar(region.q_min, region.q_max);
  pt.nome.p = rng.polar(region.p_min, region.p_max);
  pt.integers["n"] = ns[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(ns.size()) - 1))];
  if (ident.stretch > 0) pt.integers["r"] = ident.stretch;
  for (const auto& name : ident.free_params) {
    if (name == "r")
      pt.values[name] = rng.polar(region.r_min, region.r_max);
    else
      pt.values[name] = rng.polar(region.param_min, region.param_max);
  }
  return pt;
}

/// Why a dry run rejected a point, or empty if it is usable.
std::string reject_reason(const Identity& ident, const ParamPoint& pt, const SamplingRegion& region) {
  try {
    const auto value = ident.eval_double(pt);
    if (!is_finite(value.lhs) || !is_finite(value.rhs)) return "non-finite value";
    if (value.alt_rhs && !is_finite(*value.alt_rhs)) return "non-finite value";
    if (!ident.rhs_vanishes(pt.integer("n"))) {
      if (value.lhs_condition > region.max_condition) return "ill-conditioned left side";
      // Right sides are products; one factor near a zero of E loses digits
      // without any summation to measure, so compare against long double.
      const auto wide = ident.eval_extended(pt);
      const double limit = region.max_condition * std::numeric_limits<double>::epsilon();
      if (relative_error(Complex<long double>(value.rhs), wide.rhs) > limit) return "ill-conditioned right side";
    }
  } catch (const Error& err) {
    if (err.kind() == ErrorKind::DegenerateParameters || err.kind() == ErrorKind::NonzeroRequired ||
        err.kind() == ErrorKind::SingularToWorkingPrecision)
      return err.what();
    throw;
  }
  return {};
}

}  // namespace

SampledPoint sample_point(const Identity& ident, Rng& rng, const SamplingRegion& region) {
  std::vector<int> ns = ident.admissible_n();
  if (region.fixed_n && std::find(ns.begin(), ns.end(), *region.fixed_n) != ns.end()) ns = {*region.fixed_n};
  if (ns.empty()) throw Error(ErrorKind::InvalidArgument, ident.id + " has no admissible termination index");

  std::string last;
  for (int attempt = 0; attempt <= region.max_resamples; ++attempt) {
    ParamPoint pt = draw(ident, rng, region, ns);
    ident.solve(pt);
    last = reject_reason(ident, pt, region);
    if (last.empty()) return {std::move(pt), attempt};
  }
  throw Error(ErrorKind::SamplingExhausted,
              ident.id + ": no admissible point after " + std::to_string(region.max_resamples) + " redraws (last: " + last + ")");
}

SampledPoint sample_point(const Identity& ident, std::uint64_t seed, const SamplingRegion& region) {
  Rng rng(seed, stream_id(ident.id), 0);
  return sample_point(ident, rng, region);
}

IdentityValue<long double> evaluate_identity(const Identity& ident, const ParamPoint& point, Precision precision) {
  if (precision == Precision::Extended) return ident.eval_extended(point);
  const auto v = ident.eval_double(point);
  IdentityValue<long double> out{Complex<long double>(v.lhs), Complex<long double>(v.rhs), v.lhs_max_term,
                                 v.lhs_condition, std::nullopt};
  if (v.alt_rhs) out.alt_rhs = Complex<long double>(*v.alt_rhs);
  return out;
}

}  // namespace ellhyp
