#include <doctest.h>

#include "ellhyp/inversion.hpp"
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

const Nome<double> kNome{C(0.55, 0.2), C(0.12, -0.04)};

InversePair<double> kr_pair(Rng& rng, int size, Nome<double> nome = kNome) {
  KrattenthalerPair<double> kr{rng.polar(0.5, 2), {}, {}};
  for (int i = 0; i < size; ++i) {
    kr.b_seq.push_back(rng.polar(0.5, 2));
    kr.c_seq.push_back(rng.polar(0.5, 2));
  }
  return {kr, nome};
}

}  // namespace

TEST_CASE("entries above the diagonal") {
  InversePair<double> pair{RStepPair<double>{C(0.7, 0.3), C(1.2, -0.5), 2}, kNome};
  CHECK(kind_of([&] { f_entry(pair, 2, 3); }) == ErrorKind::IndexOutOfTriangle);
  CHECK(kind_of([&] { f_inv_entry(pair, 0, 1); }) == ErrorKind::IndexOutOfTriangle);
  CHECK(kind_of([&] { f_entry(pair, -1, 0); }) == ErrorKind::InvalidArgument);
  pair.lenient = true;
  CHECK(f_entry(pair, 2, 3) == C(0));
  CHECK(f_inv_entry(pair, 4, 7) == C(0));
}

TEST_CASE("diagonal entries are mutually inverse") {
  Rng rng(21);
  std::vector<InversePair<double>> pairs;
  for (int r = 1; r <= 4; ++r) pairs.push_back({RStepPair<double>{rng.polar(0.5, 2), rng.polar(0.5, 2), r}, kNome});
  pairs.push_back({RawRPair<double>{rng.polar(0.5, 2), rng.polar(0.5, 2), rng.polar(0.3, 0.8)}, kNome});
  pairs.push_back(kr_pair(rng, 9));
  for (const auto& pair : pairs)
    for (int n = 0; n <= 8; ++n) CHECK(relative_error(f_inv_entry(pair, n, n) * f_entry(pair, n, n), C(1)) < 1e-11);
}

TEST_CASE("orthogonality of a single entry") {
  const InversePair<double> pair{RStepPair<double>{C(0.7, 0.3), C(1.2, -0.5), 3}, kNome};
  CHECK(check_orthogonality(pair, 0) <= 1e-14);
  CHECK(kind_of([&] { check_orthogonality(pair, 13); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("orthogonality of the stretched pairs") {
  Rng rng(22);
  for (int r = 1; r <= 4; ++r) {
    int done = 0;
    while (done < 5) {
      const Nome<double> nome{rng.polar(0.3, 0.8), rng.polar(0.05, 0.3)};
      const InversePair<double> pair{RStepPair<double>{rng.polar(0.5, 2), rng.polar(0.5, 2), r}, nome};
      try {
        const auto res = orthogonality_residual(pair, 8);
        if (!std::isfinite(res.residual)) continue;
        ++done;
        CHECK(res.residual <= 1e-8);
      } catch (const Error& e) {
        REQUIRE(e.kind() == ErrorKind::DegenerateParameters);
      }
    }
  }
}

TEST_CASE("orthogonality of the two-base and Krattenthaler pairs") {
  Rng rng(23);
  for (int t = 0; t < 5; ++t) {
    const InversePair<double> raw{RawRPair<double>{rng.polar(0.5, 2), rng.polar(0.5, 2), rng.polar(0.3, 0.8)}, kNome};
    CHECK(check_orthogonality(raw, 8) <= 1e-8);
    CHECK(check_orthogonality(kr_pair(rng, 7), 6) <= 1e-8);
  }
}

TEST_CASE("Krattenthaler pair needs distinct c") {
  Rng rng(24);
  auto pair = kr_pair(rng, 4);
  auto& kr = std::get<KrattenthalerPair<double>>(pair.kind);
  kr.c_seq[2] = kr.c_seq[0];
  CHECK(kind_of([&] { check_orthogonality(pair, 3); }) == ErrorKind::DegenerateParameters);
  kr.c_seq.pop_back();
  CHECK(kind_of([&] { check_orthogonality(pair, 3); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("stretched pair at p = 0, r = 1 is the classical pair") {
  const C q(0.6, 0.15), a(0.8, 0.4), b(1.3, -0.2);
  const InversePair<double> pair{RStepPair<double>{a, b, 1}, Nome<double>{q, C(0)}};
  using classical::poch;
  using classical::qpow;
  for (int n = 0; n <= 6; ++n)
    for (int k = 0; k <= n; ++k) {
      const C f = (C(1) - a * b * qpow(q, 2 * k)) / (C(1) - a * b) * poch(a * qpow(q, n), q, k) /
                  poch(b * qpow(q, 1 - n), q, k) * poch(a * b, q, k) * poch(qpow(q, -n), q, k) /
                  (poch(q, q, k) * poch(a * b * qpow(q, n + 1), q, k)) * qpow(q, k);
      CHECK(classical::rel(f_entry(pair, n, k), f) < 1e-12);
    }
}

TEST_CASE("applying the pair to the unit sequence gives the first column") {
  const InversePair<double> pair{RStepPair<double>{C(0.7, 0.3), C(1.2, -0.5), 2}, kNome};
  const Sequence<double> unit = [](int k) { return k == 0 ? C(1) : C(0); };
  for (int n = 0; n <= 5; ++n) {
    CHECK(apply_pair(pair, unit, n) == f_entry(pair, n, 0));
    CHECK(apply_inverse(pair, unit, n) == f_inv_entry(pair, n, 0));
  }
}

TEST_CASE("proof sequences replay through the stretched pairs") {
  const C a(0.9, 0.4), b(1.4, -0.3), c(-0.6, 0.8), d(0.7, 1.1);
  const auto quad = quadratic_proof_sequences(a, b, c, d, kNome);
  const auto cubic = cubic_proof_sequences(a, b, c, kNome);
  const InversePair<double> pair2{RStepPair<double>{a, b, 2}, kNome}, pair3{RStepPair<double>{a, b, 3}, kNome};
  for (int n = 0; n <= 5; ++n) {
    CHECK(relative_error(apply_pair(pair2, quad.a, n), quad.b(n)) < 1e-8);
    CHECK(relative_error(apply_pair(pair3, cubic.a, n), cubic.b(n)) < 1e-8);
  }
  for (int r = 1; r <= 3; ++r) {
    const auto dual = stretched_dual_sequences(a, b, c, r, kNome);
    const InversePair<double> pair{RStepPair<double>{a, b, r}, kNome};
    for (int n = 0; n <= 4; ++n) CHECK(relative_error(apply_inverse(pair, dual.b, n), dual.a(n)) < 1e-8);
  }
}

TEST_CASE("addition formula") {
  const C p(0.15, 0.1);
  const auto [lhs, rhs] = addition_formula_sides(C(0.8, 0.3), C(1.3, -0.6), C(-0.5, 0.9), C(0.6, 0.2), p);
  CHECK(relative_error(lhs, rhs) < 1e-12);
  // At p = 0 both sides are polynomials in the four variables.
  const auto [l0, r0] = addition_formula_sides(C(2), C(3), C(5), C(7), C(0));
  CHECK(relative_error(l0, r0) < 1e-14);
}

TEST_CASE("the telescoped lemma with one term is the addition formula") {
  const C a(0.8, 0.3), b(1.3, -0.6), c(-0.5, 0.9), d(0.6, 0.2), p(0.15, 0.1);
  const std::vector<C> as{a}, bs{b}, cs{c}, ds{d};
  const auto [lhs, rhs] = macdonald_lemma_sides<double>(as, bs, cs, ds, p);
  const auto [al, ar] = addition_formula_sides(a, b, c, d, p);
  CHECK(relative_error(lhs, ar) < 1e-13);
  CHECK(relative_error(rhs, al) < 1e-13);
}

TEST_CASE("telescoped lemma up to n = 6") {
  Rng rng(25);
  for (int t = 0; t < 30; ++t) {
    const int n = rng.uniform_int(0, 6);
    std::vector<C> a, b, c, d;
    for (int j = 0; j <= n; ++j) {
      a.push_back(rng.polar(0.5, 2));
      b.push_back(rng.polar(0.5, 2));
      c.push_back(rng.polar(0.5, 2));
      d.push_back(rng.polar(0.5, 2));
    }
    const C p = rng.polar(0.05, 0.3);
    const auto [lhs, rhs] = macdonald_lemma_sides<double>(a, b, c, d, p);
    // Scale by the size of the two products on the right, which can cancel.
    C g(1), h(1);
    for (int j = 0; j <= n; ++j) {
      const auto J = static_cast<std::size_t>(j);
      g *= eval_E(a[J] * c[J], p) * eval_E(a[J] / c[J], p) * eval_E(b[J] * d[J], p) * eval_E(b[J] / d[J], p);
      h *= eval_E(a[J] * d[J], p) * eval_E(a[J] / d[J], p) * eval_E(b[J] * c[J], p) * eval_E(b[J] / c[J], p);
    }
    CHECK(std::abs(lhs - rhs) / (std::abs(g) + std::abs(h)) < 1e-12);
  }
  CHECK(kind_of([] { macdonald_lemma_sides<double>({}, {}, {}, {}, C(0.1)); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("two-base sum at c = 1 vanishes") {
  Rng rng(26);
  for (int t = 0; t < 20; ++t) {
    const C a = rng.polar(0.5, 2), b = rng.polar(0.5, 2), r = rng.polar(0.3, 0.8);
    const int n = rng.uniform_int(1, 6);
    const auto terms = two_base_sum_terms(a, b, C(1), r, kNome, n);
    SumAccumulator<double> acc;
    for (const auto& term : terms) acc.add(term);
    CHECK(std::abs(acc.value()) / acc.max_abs() < 1e-10);
  }
}

TEST_CASE("inversion suite runs clean") {
  SuiteOptions opt;
  opt.trials = 10;
  opt.seed = 3;
  const auto report = run_suite("inversion", opt);
  CHECK(report.passed());
  for (const auto& check : report.checks) CHECK_MESSAGE(check.failures == 0, check.name);
}
