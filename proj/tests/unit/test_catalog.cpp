#include <doctest.h>

#include <set>

#include "ellhyp/catalog.hpp"
#include "ellhyp/verification.hpp"
#include "support/classical.hpp"

using namespace ellhyp;
using C = Complex<double>;

namespace {

SamplingRegion classical_region() {
  SamplingRegion region;
  region.p_min = region.p_max = 0.0;
  region.max_condition = 1e2;
  return region;
}

}  // namespace

TEST_CASE("catalog contents") {
  const auto& all = list_identities();
  CHECK(all.size() == 31);
  std::set<std::string> ids;
  for (const auto& ident : all) {
    ids.insert(ident.id);
    CHECK(find_identity(ident.id) == &ident);
    CHECK_FALSE(ident.admissible_n().empty());
    CHECK(ident.eval_double);
    CHECK(ident.eval_extended);
  }
  CHECK(ids.size() == all.size());
  CHECK(find_identity("no_such_identity") == nullptr);
}

TEST_CASE("residue-class branches") {
  CHECK(find_identity("etrafo5_b0")->admissible_n() == std::vector<int>{0, 1, 3, 4, 6});
  CHECK(find_identity("etrafo5_b2")->admissible_n() == std::vector<int>{1, 2, 4, 5});
  const auto* egs = find_identity("egs");
  CHECK(egs->rhs_vanishes(3));
  CHECK_FALSE(egs->rhs_vanishes(4));
}

TEST_CASE("sampling is deterministic") {
  const auto* e87 = find_identity("e87");
  const auto a = sample_point(*e87, 17), b = sample_point(*e87, 17), c = sample_point(*e87, 18);
  CHECK(a.point == b.point);
  CHECK_FALSE(a.point == c.point);
  CHECK(e87->constraint_residual(a.point) <= 1e-12);
}

TEST_CASE("sampling gives up after the redraw budget") {
  SamplingRegion region;
  region.max_condition = 0.5;  // every left side has condition >= 1
  region.max_resamples = 3;
  try {
    sample_point(*find_identity("e87"), 1, region);
    FAIL("expected SamplingExhausted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SamplingExhausted);
  }
}

TEST_CASE("Jackson summation, 100 trials") {
  CheckOptions opt;
  opt.trials = 100;
  opt.tol = 1e-9;
  const auto report = check_identity(*find_identity("e87"), opt);
  CHECK(report.failures.empty());
  CHECK(report.max_rel_err <= 1e-9);
}

TEST_CASE("Bailey and Jackson at p = 0 against the classical forms") {
  const auto* e109 = find_identity("e109");
  const auto* e87 = find_identity("e87");
  Rng rng(61);
  for (int t = 0; t < 30; ++t) {
    const auto s = sample_point(*e109, rng, classical_region()).point;
    const auto v = e109->eval_double(s);
    const auto [lhs, rhs] =
        classical::bailey(s.at("a"), s.at("b"), s.at("c"), s.at("d"), s.at("e"), s.at("f"), s.nome.q, s.integer("n"));
    CHECK(relative_error(v.lhs, lhs) <= 1e-12);
    CHECK(relative_error(v.rhs, rhs) <= 1e-12);

    const auto j = sample_point(*e87, rng, classical_region()).point;
    const auto w = e87->eval_double(j);
    const auto [jl, jr] = classical::jackson(j.at("a"), j.at("b"), j.at("c"), j.at("d"), j.nome.q, j.integer("n"));
    CHECK(relative_error(w.lhs, jl) <= 1e-12);
    CHECK(relative_error(w.rhs, jr) <= 1e-12);
  }
}

TEST_CASE("Gessel-Stanton type sum vanishes at odd n") {
  CheckOptions opt;
  opt.trials = 20;
  opt.tol = 1e-9;
  for (int n : {1, 3, 5}) {
    opt.region.fixed_n = n;
    CHECK(check_identity(*find_identity("egs"), opt).passed());
  }
}

TEST_CASE("alternative closed forms agree") {
  CheckOptions opt;
  opt.trials = 20;
  opt.tol = 1e-9;
  CHECK(cross_check_transform_pairs(opt).passed());
  opt.region.p_min = opt.region.p_max = 0.0;
  CHECK(cross_check_transform_pairs(opt).passed());
}

TEST_CASE("every identity is continuous as p -> 0") {
  for (const auto& ident : list_identities()) {
    CAPTURE(ident.id);
    Rng rng(62, stream_id(ident.id), 0);
    SamplingRegion region = classical_region();
    region.max_condition = 1e4;
    auto point = sample_point(ident, rng, region).point;
    const auto at0 = ident.eval_double(point);
    const double scale = std::max({at0.lhs_max_term, std::abs(at0.rhs), 1e-300});
    auto drift = [&](double p) {
      point.nome.p = C(p);
      const auto v = ident.eval_double(point);
      return std::max(std::abs(v.lhs - at0.lhs), std::abs(v.rhs - at0.rhs)) / scale;
    };
    // The drift is first order in p with a slope of order max|argument|,
    // which is large when a solved parameter lands near zero.
    const double d6 = drift(1e-6), d8 = drift(1e-8);
    CHECK(d8 <= 1e-4);
    if (d8 > 1e-11) CHECK(d6 / d8 == doctest::Approx(100).epsilon(0.05));
    else CHECK(d6 <= 1e-8);
  }
}

TEST_CASE("all identities pass a short run in both precisions") {
  CheckOptions opt;
  opt.trials = 10;
  opt.tol = 1e-8;
  for (const auto& ident : list_identities()) {
    CAPTURE(ident.id);
    opt.precision = Precision::Double;
    CHECK(check_identity(ident, opt).passed());
    opt.precision = Precision::Extended;
    CHECK(check_identity(ident, opt).passed());
  }
}
