#include <doctest.h>

#include "ellhyp/rng.hpp"
#include "ellhyp/series.hpp"
#include "oracle_values.hpp"
#include "support/classical.hpp"

using namespace ellhyp;
using C = Complex<double>;

namespace {

OmegaSpec<double> jackson_spec(C a, C b, C c, C d, Nome<double> nome, int n) {
  const C e = a * a * ipow(nome.q, n + 1) / (b * c * d);
  return {a, {b, c, d, e}, nome, n};
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an ellhyp::Error");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("a series of length zero is exactly 1") {
  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    const Nome<double> nome{rng.polar(0.3, 0.8), rng.polar(0.05, 0.3)};
    const auto spec = jackson_spec(rng.polar(0.5, 2), rng.polar(0.5, 2), rng.polar(0.5, 2), rng.polar(0.5, 2), nome, 0);
    CHECK(eval_omega(spec) == C(1));
  }
}

TEST_CASE("8omega7 against the mpmath oracle") {
  const auto spec = jackson_spec(C(0.25), C(0.3), C(0.4), C(0.7), Nome<double>{C(0.5), C(0.1)}, 2);
  CHECK(relative_error(eval_omega(spec), oracle::jackson_sum_n2) < 1e-14);

  const auto cspec = jackson_spec(C(0.8, 0.6), C(1.3, -0.4), C(-0.5, 0.9), C(0.6, 1.1),
                                  Nome<double>{C(0.45, 0.2), C(0.12, -0.05)}, 3);
  CHECK(relative_error(eval_omega(cspec), oracle::jackson_sum_complex_n3) < 1e-13);
}

TEST_CASE("p = 0 Jackson sum matches the classical product") {
  Rng rng(4);
  for (int t = 0; t < 50; ++t) {
    const C a = rng.polar(0.5, 2), b = rng.polar(0.5, 2), c = rng.polar(0.5, 2), d = rng.polar(0.5, 2);
    const C q = rng.polar(0.3, 0.8);
    const int n = rng.uniform_int(0, 5);
    const auto s = sum_omega(jackson_spec(a, b, c, d, Nome<double>{q, C(0)}, n));
    if (s.condition() > 1e2) continue;
    CHECK(relative_error(s.value, classical::jackson(a, b, c, d, q, n).second) < 1e-12);
  }
}

TEST_CASE("p = 0 agrees with the classical very-well-poised sum") {
  Rng rng(5);
  int compared = 0;
  while (compared < 100) {
    const C a = rng.polar(0.5, 2), b = rng.polar(0.5, 2), c = rng.polar(0.5, 2), d = rng.polar(0.5, 2);
    const C e = rng.polar(0.5, 2), f = rng.polar(0.5, 2), q = rng.polar(0.3, 0.8);
    const int n = rng.uniform_int(1, 5);
    const C g = a * a * a * ipow(q, n + 2) / (b * c * d * e * f);
    const auto s = sum_omega(OmegaSpec<double>{a, {b, c, d, e, f, g}, Nome<double>{q, C(0)}, n});
    if (s.condition() > 1e2) continue;
    ++compared;
    const C ref = classical::very_well_poised(a, {b, c, d, e, f, g, ipow(q, -n)}, q, n);
    CHECK(relative_error(s.value, ref) < 1e-12);
  }
}

TEST_CASE("consecutive terms differ by the explicit E ratio") {
  Rng rng(6);
  for (int t = 0; t < 30; ++t) {
    const Nome<double> nome{rng.polar(0.3, 0.8), rng.polar(0.05, 0.3)};
    const C q = nome.q, p = nome.p;
    const int n = 4;
    const auto spec = jackson_spec(rng.polar(0.5, 2), rng.polar(0.5, 2), rng.polar(0.5, 2), rng.polar(0.5, 2), nome, n);
    const auto terms = omega_terms(spec);
    REQUIRE(terms.size() == 5);
    std::vector<C> numer{spec.a1};
    numer.insert(numer.end(), spec.upper.begin(), spec.upper.end());
    numer.push_back(ipow(q, -n));
    for (int k = 1; k <= n; ++k) {
      C ratio = eval_E(spec.a1 * ipow(q, 2 * k), p) / eval_E(spec.a1 * ipow(q, 2 * k - 2), p) * q /
                eval_E(ipow(q, k), p);
      for (const C& u : numer) ratio *= eval_E(u * ipow(q, k - 1), p);
      for (std::size_t i = 1; i < numer.size(); ++i) ratio /= eval_E(spec.a1 * ipow(q, k) / numer[i], p);
      const auto K = static_cast<std::size_t>(k);
      CHECK(relative_error(terms[K] / terms[K - 1], ratio) < 1e-11);
    }
  }
}

TEST_CASE("balance residual") {
  const Nome<double> nome{C(0.6, 0.2), C(0.1, 0.05)};
  auto spec = jackson_spec(C(0.9, 0.3), C(1.2), C(0.7, -0.5), C(-0.6, 1.0), nome, 3);
  CHECK(balance_residual(spec) <= 1e-12);
  spec.upper[1] *= 1.1;
  CHECK(balance_residual(spec) > 1e-3);
  CHECK(kind_of([&] { eval_omega(spec); }) == ErrorKind::BalanceViolation);
  SeriesOptions lenient;
  lenient.balance = BalanceMode::Lenient;
  CHECK(std::isfinite(std::abs(eval_omega(spec, lenient))));

  const C a(0.9, 0.3), b(1.2), c(0.7, -0.5), d(-0.6, 1.0), e(1.1, 0.4), f(0.5, 0.5);
  const int n = 2;
  const C g = a * a * a * ipow(nome.q, n + 2) / (b * c * d * e * f);
  CHECK(balance_residual(OmegaSpec<double>{a, {b, c, d, e, f, g}, nome, n}) <= 1e-12);
}

TEST_CASE("vanishing denominators are reported") {
  const Nome<double> nome{C(0.5, 0.1), C(0.2)};
  SeriesOptions lenient;
  lenient.balance = BalanceMode::Lenient;
  const C a(0.8, 0.2);
  // a q / b = 1 puts E(1) = 0 in the denominator at k = 1.
  const OmegaSpec<double> spec{a, {a * nome.q, C(0.9), C(1.3)}, nome, 2};
  CHECK(kind_of([&] { eval_omega(spec, lenient); }) == ErrorKind::DegenerateParameters);
  CHECK(kind_of([&] { eval_omega(OmegaSpec<double>{a, {C(0.9)}, nome, -1}, lenient); }) == ErrorKind::InvalidArgument);
}
