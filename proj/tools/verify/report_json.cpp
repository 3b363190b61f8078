#include "report_json.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace verify {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

double read_number(const json& j) {
  if (j.is_null()) return std::numeric_limits<double>::infinity();
  return j.get<double>();
}

ordered_json complex(std::complex<double> z) { return ordered_json::array({number(z.real()), number(z.imag())}); }

std::complex<double> read_complex(const json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("complex value must be [re, im]");
  return {read_number(j[0]), read_number(j[1])};
}

}  // namespace

ordered_json to_json(const ellhyp::ParamPoint& point) {
  ordered_json out;
  out["q"] = complex(point.nome.q);
  out["p"] = complex(point.nome.p);
  ordered_json values = ordered_json::object();
  for (const auto& [name, z] : point.values) values[name] = complex(z);
  out["values"] = values;
  ordered_json ints = ordered_json::object();
  for (const auto& [name, k] : point.integers) ints[name] = k;
  out["integers"] = ints;
  return out;
}

ordered_json to_json(const ellhyp::VerificationReport& report) {
  ordered_json out;
  out["schema"] = ellhyp::VerificationReport::kSchema;
  out["kind"] = report.kind;
  out["identity_id"] = report.target;
  out["trials"] = report.trials;
  out["tol"] = number(report.tol);
  out["seed"] = report.seed;
  out["precision"] = report.precision;
  out["rng"] = report.rng;
  out["max_rel_err"] = number(report.max_rel_err);
  out["mean_rel_err"] = number(report.mean_rel_err);
  out["resamples"] = report.resamples;
  out["passed"] = report.passed();
  out["finding"] = report.finding;

  ordered_json checks = ordered_json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"trials", c.trials},
                      {"tol", number(c.tol)},
                      {"max_rel_err", number(c.max_rel_err)},
                      {"mean_rel_err", number(c.mean_rel_err)},
                      {"failures", c.failures},
                      {"resamples", c.resamples}});
  }
  out["checks"] = checks;

  ordered_json failures = ordered_json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"check", f.check},
                        {"trial_index", f.trial_index},
                        {"rel_err", number(f.rel_err)},
                        {"message", f.message},
                        {"point", to_json(f.point)}});
  }
  out["failures"] = failures;
  out["worst_point"] = report.worst_point ? to_json(*report.worst_point) : ordered_json(nullptr);
  out["wall_time_ms"] = number(report.wall_time_ms);
  return out;
}

ellhyp::ParamPoint point_from_json(const json& j) {
  ellhyp::ParamPoint point;
  point.nome.q = read_complex(j.at("q"));
  point.nome.p = read_complex(j.at("p"));
  for (const auto& [name, z] : j.at("values").items()) point.values[name] = read_complex(z);
  for (const auto& [name, k] : j.at("integers").items()) point.integers[name] = k.get<int>();
  return point;
}

ellhyp::VerificationReport report_from_json(const json& j) {
  const int schema = j.at("schema").get<int>();
  if (schema != ellhyp::VerificationReport::kSchema)
    throw std::invalid_argument("unsupported report schema " + std::to_string(schema));
  ellhyp::VerificationReport report;
  report.kind = j.at("kind").get<std::string>();
  report.target = j.at("identity_id").get<std::string>();
  report.trials = j.at("trials").get<int>();
  report.tol = read_number(j.at("tol"));
  report.seed = j.at("seed").get<std::uint64_t>();
  report.precision = j.at("precision").get<std::string>();
  report.rng = j.at("rng").get<std::string>();
  report.max_rel_err = read_number(j.at("max_rel_err"));
  report.mean_rel_err = read_number(j.at("mean_rel_err"));
  report.resamples = j.at("resamples").get<int>();
  report.finding = j.at("finding").get<bool>();
  for (const auto& c : j.at("checks")) {
    report.checks.push_back({c.at("name").get<std::string>(), c.at("trials").get<int>(), read_number(c.at("tol")),
                             read_number(c.at("max_rel_err")), read_number(c.at("mean_rel_err")),
                             c.at("failures").get<int>(), c.at("resamples").get<int>()});
  }
  for (const auto& f : j.at("failures")) {
    report.failures.push_back({f.at("check").get<std::string>(), f.at("trial_index").get<int>(),
                               read_number(f.at("rel_err")), point_from_json(f.at("point")),
                               f.at("message").get<std::string>()});
  }
  if (!j.at("worst_point").is_null()) report.worst_point = point_from_json(j.at("worst_point"));
  report.wall_time_ms = read_number(j.at("wall_time_ms"));
  return report;
}

std::string dump_report(const ellhyp::VerificationReport& report) { return to_json(report).dump(2) + "\n"; }

}  // namespace verify
