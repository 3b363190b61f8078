#include <doctest.h>

#include "ellhyp/multivar.hpp"
#include "ellhyp/rng.hpp"
#include "ellhyp/verification.hpp"
#include "support/classical.hpp"

using namespace ellhyp;
using C = Complex<double>;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an ellhyp::Error");
  return ErrorKind::InvalidArgument;
}

CnPoint<double> random_point(Rng& rng, int n, int N, bool elliptic = true) {
  CnPoint<double> pt;
  for (int i = 0; i < n; ++i) pt.x.push_back(rng.polar(0.5, 2));
  pt.a = rng.polar(0.5, 2);
  pt.b = rng.polar(0.5, 2);
  pt.c = rng.polar(0.5, 2);
  pt.d = rng.polar(0.5, 2);
  pt.f = rng.polar(0.5, 2);
  pt.n = n;
  pt.N = N;
  pt.nome = {rng.polar(0.3, 0.8), elliptic ? rng.polar(0.05, 0.3) : C(0)};
  return pt;
}

// The 8-omega-7 upper parameters (b, c, d, e) with e fixed by the Omega balance.
std::vector<C> omega_upper(const CnPoint<double>& pt) { return {pt.b, pt.c, pt.d, omega87_e(pt)}; }

}  // namespace

TEST_CASE("C_n Jackson sum with N = 0") {
  Rng rng(41);
  for (int n = 1; n <= 3; ++n) {
    auto pt = random_point(rng, n, 0);
    pt.e = cn_jackson_e(pt);
    const auto s = cn_jackson_sides(pt);
    CHECK(relative_error(s.lhs, C(1)) < 1e-14);
    CHECK(s.rhs == C(1));
  }
}

TEST_CASE("C_n Jackson sum with one variable is Jackson's sum") {
  Rng rng(42);
  int compared = 0;
  while (compared < 30) {
    auto pt = random_point(rng, 1, rng.uniform_int(1, 5));
    pt.e = cn_jackson_e(pt);
    const auto s = cn_jackson_sides(pt);
    if (s.condition > 1e2) continue;
    ++compared;
    CHECK(s.rel_error() < 1e-12);
    // a -> a x^2 and b, c, d -> b x, c x, d x turns it into the 8omega7 sum.
    const C x = pt.x[0];
    const C a = pt.a * x * x, b = pt.b * x, c = pt.c * x, d = pt.d * x;
    const C e = a * a * ipow(pt.nome.q, pt.N + 1) / (b * c * d);
    CHECK(relative_error(eval_omega(OmegaSpec<double>{a, {b, c, d, e}, pt.nome, pt.N}), s.rhs) < 1e-12);
  }
}

TEST_CASE("C_n Jackson sum, n = 2 and n = 3") {
  Rng rng(43);
  for (int n : {2, 3}) {
    int compared = 0;
    while (compared < 20) {
      auto pt = random_point(rng, n, 2);
      pt.e = cn_jackson_e(pt);
      const auto s = cn_jackson_sides(pt);
      if (!(s.condition <= 1e6)) continue;
      ++compared;
      CHECK(s.rel_error() < 1e-8);
      const auto r = cn_jackson_sides(pt, SummationOrder::Reverse);
      CHECK(relative_error(r.lhs, s.lhs) < 1e-13 * s.condition);
    }
  }
}

TEST_CASE("brute-force cap") {
  Rng rng(44);
  auto pt = random_point(rng, 5, 10);
  pt.e = cn_jackson_e(pt);
  CHECK(kind_of([&] { cn_jackson_sides(pt); }) == ErrorKind::InvalidArgument);
  pt.x.pop_back();
  CHECK(kind_of([&] { cn_jackson_sides(pt); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("Omega series with N = 0 is exactly 1") {
  Rng rng(45);
  for (int nparts = 1; nparts <= 4; ++nparts) {
    const auto pt = random_point(rng, nparts, 0);
    CHECK(eval_Omega(pt.a, omega_upper(pt), pt.nome, pt.x[0], nparts, 0) == C(1));
  }
}

TEST_CASE("Omega series with one row is the omega series") {
  Rng rng(46);
  int compared = 0;
  while (compared < 30) {
    const auto pt = random_point(rng, 1, rng.uniform_int(1, 5));
    const auto upper = omega_upper(pt);
    const auto one = sum_omega(OmegaSpec<double>{pt.a, upper, pt.nome, pt.N});
    if (one.condition() > 1e2) continue;
    ++compared;
    CHECK(relative_error(eval_Omega(pt.a, upper, pt.nome, pt.x[0], 1, pt.N), one.value) < 1e-12);
  }
}

TEST_CASE("Omega series at x = 1 collapses to a power of omega") {
  Rng rng(47);
  for (int t = 0; t < 20; ++t) {
    auto pt = random_point(rng, 2, 1);
    pt.x[0] = C(1);
    const auto upper = omega_upper(pt);
    const C one = eval_omega(OmegaSpec<double>{pt.a, upper, pt.nome, 1});
    CHECK(relative_error(eval_Omega_at_x1(pt.a, upper, pt.nome, 2, 1), one * one) < 1e-12);
    CHECK(relative_error(eval_Omega_at_x1(pt.a, upper, pt.nome, 3, 1), one * one * one) < 1e-12);
  }
}

TEST_CASE("Omega balance is enforced") {
  Rng rng(48);
  const auto pt = random_point(rng, 2, 2);
  auto upper = omega_upper(pt);
  CHECK(omega_balance_residual(pt.a, upper, pt.nome, pt.x[0], 2, 2) < 1e-12);
  upper[0] *= 1.05;
  CHECK(kind_of([&] { eval_Omega(pt.a, upper, pt.nome, pt.x[0], 2, 2); }) == ErrorKind::BalanceViolation);
  CHECK(kind_of([&] { eval_Omega(pt.a, omega_upper(pt), pt.nome, C(0), 2, 2); }) == ErrorKind::NonzeroRequired);
}

TEST_CASE("transformation with one row is Bailey's transformation") {
  Rng rng(49);
  int compared = 0;
  while (compared < 30) {
    auto pt = random_point(rng, 1, rng.uniform_int(1, 4), false);
    pt.e = rng.polar(0.5, 2);
    pt.g = conjecture_g(pt);
    const auto s = conjecture_sides(pt);
    if (s.condition > 1e2) continue;
    ++compared;
    const auto [lhs, rhs] = classical::bailey(pt.a, pt.b, pt.c, pt.d, pt.e, pt.f, pt.nome.q, pt.N);
    CHECK(relative_error(s.lhs, lhs) < 1e-12);
    CHECK(relative_error(s.rhs, rhs) < 1e-10);
  }
  compared = 0;
  while (compared < 20) {
    auto pt = random_point(rng, 1, rng.uniform_int(1, 4));
    pt.e = rng.polar(0.5, 2);
    pt.g = conjecture_g(pt);
    const auto s = conjecture_sides(pt);
    if (s.condition > 1e6) continue;
    ++compared;
    CHECK(s.rel_error() < 1e-8);
  }
}

TEST_CASE("transformation with N = 0") {
  Rng rng(50);
  auto pt = random_point(rng, 2, 0);
  pt.e = rng.polar(0.5, 2);
  pt.g = conjecture_g(pt);
  const auto s = conjecture_sides(pt);
  CHECK(s.lhs == C(1));
  CHECK(relative_error(s.rhs, C(1)) < 1e-15);
}

TEST_CASE("8-Omega-7 summation") {
  Rng rng(51);
  int compared = 0;
  while (compared < 20) {
    auto pt = random_point(rng, 2, 2);
    pt.e = omega87_e(pt);
    const auto s = omega87_sides(pt);
    if (s.condition > 1e6) continue;
    ++compared;
    CHECK(s.rel_error() < 1e-8);
  }
}

TEST_CASE("cn suite runs clean") {
  SuiteOptions opt;
  opt.trials = 10;
  opt.seed = 4;
  CHECK(run_suite("cn", opt).passed());
}
