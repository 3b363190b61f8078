#include <doctest.h>

#include "ellhyp/determinants.hpp"
#include "ellhyp/inversion.hpp"
#include "ellhyp/rng.hpp"
#include "ellhyp/verification.hpp"
#include "support/classical.hpp"

using namespace ellhyp;
using C = Complex<double>;

namespace {

std::vector<std::vector<C>> rows_of(const Matrix<double>& m) {
  std::vector<std::vector<C>> out(static_cast<std::size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out[static_cast<std::size_t>(i)].push_back(m(i, j));
  return out;
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

const Nome<double> kNome{C(0.5, 0.15), C(0.1, 0.05)};

}  // namespace

TEST_CASE("det_numeric basics") {
  CHECK(det_numeric(Matrix<double>::identity(4)).value == C(1));
  Matrix<double> m(2, 2);
  m(0, 0) = C(1, 2);
  m(0, 1) = C(3, -1);
  m(1, 0) = C(0.5);
  m(1, 1) = C(-2, 1);
  CHECK(relative_error(det_numeric(m).value, m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)) < 1e-15);

  Matrix<double> singular(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) singular(i, j) = C(i + 1) * C(j + 1);
  CHECK(kind_of([&] { det_numeric(singular); }) == ErrorKind::SingularToWorkingPrecision);
}

TEST_CASE("det_numeric against cofactor expansion") {
  Rng rng(31);
  for (int n = 1; n <= 6; ++n)
    for (int t = 0; t < 5; ++t) {
      Matrix<double> m(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = rng.polar(0.1, 3.0);
      CHECK(relative_error(det_numeric(m).value, classical::cofactor_det(rows_of(m))) < 1e-10);
    }
}

TEST_CASE("determinant is blind to diagonal scaling in its condition estimate") {
  Matrix<double> m(3, 3);
  for (int i = 0; i < 3; ++i) m(i, i) = C(std::pow(10.0, 4 * i));
  CHECK(det_numeric(m).condition == doctest::Approx(1.0));
}

TEST_CASE("Andrews-Stanton type determinant") {
  const C x(0.9, 0.3), y(1.2, -0.4);
  const auto one = andrews_stanton_sides(x, y, kNome, 1);
  CHECK(relative_error(one.det, one.product) < 1e-13);
  for (int n = 2; n <= 5; ++n) {
    const auto sides = andrews_stanton_sides(x, y, kNome, n);
    CHECK(sides.ratio_error() < 1e-8);
  }
}

TEST_CASE("Andrews-Stanton at p = 0 with the cofactor oracle") {
  const Nome<double> nome{C(0.6, 0.1), C(0)};
  const C x(0.8, 0.5), y(1.4, 0.2);
  for (int n = 1; n <= 5; ++n) {
    const auto m = andrews_stanton_matrix(x, y, nome, n);
    CHECK(relative_error(C(classical::cofactor_det(rows_of(m))), andrews_stanton_product(x, y, nome, n)) < 1e-8);
  }
}

TEST_CASE("structural zeros of the Andrews-Stanton matrix are exact") {
  const auto m = andrews_stanton_matrix(C(0.9, 0.3), C(1.2, -0.4), kNome, 5);
  // 1/(q^{i+1};q,p)_{i-j} vanishes once 2i - j + 1 <= 0 (1-based i, j).
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j)
      if (2 * i - j + 1 <= 0) CHECK(m(i - 1, j - 1) == C(0));
}

TEST_CASE("LU decomposition of the Andrews-Stanton matrix") {
  const C x(0.9, 0.3), y(1.2, -0.4);
  for (int n = 1; n <= 5; ++n) {
    const auto M = andrews_stanton_matrix(x, y, kNome, n);
    const auto lu = andrews_stanton_lu(x, y, kNome, n);
    for (int i = 0; i < n; ++i) {
      CHECK(relative_error(lu.U(i, i), C(1)) < 1e-14);
      for (int j = 0; j < i; ++j) CHECK(lu.U(i, j) == C(0));
    }
    const auto [upper, diag] = lu_replay_residuals(M, lu);
    CHECK(upper <= 1e-9);
    CHECK(diag <= 1e-9);
    C prod(1);
    for (const auto& l : lu.L_diag) prod *= l;
    CHECK(relative_error(prod, det_numeric(M).value) < 1e-8);
  }
}

TEST_CASE("corollary determinant") {
  const C A(0.8, 0.2), B(1.1, -0.3), Cc(0.7, 0.6);
  const std::vector<C> one{C(1.3, 0.4)};
  const auto s1 = corollary_determ_sides<double>(one, A, B, Cc, kNome);
  CHECK(s1.det == C(1));
  CHECK(relative_error(s1.product, C(1)) < 1e-15);
  std::vector<C> X{C(1.3, 0.4), C(-0.6, 0.9), C(0.5, -1.2), C(1.7, 0.1), C(-0.9, -0.8)};
  for (std::size_t n = 2; n <= 5; ++n) {
    const std::vector<C> xs(X.begin(), X.begin() + static_cast<long>(n));
    CHECK(corollary_determ_sides<double>(xs, A, B, Cc, kNome).ratio_error() < 1e-8);
  }
}

TEST_CASE("elliptic determinant lemma") {
  const C B(1.1, -0.3), Cc(0.7, 0.6);
  const std::vector<C> X{C(1.3, 0.4), C(-0.6, 0.9), C(0.5, -1.2), C(1.7, 0.1), C(-0.9, -0.8)};
  const std::vector<C> A{C(0.8, 0.2), C(1.2, 0.5), C(-0.7, 0.4), C(0.6, -0.9), C(1.5, 0.3)};
  for (std::size_t n = 1; n <= 5; ++n) {
    EllipticDetProblem<double> pb{{X.begin(), X.begin() + static_cast<long>(n)},
                                  {A.begin(), A.begin() + static_cast<long>(n)}, B, Cc, kNome};
    const auto sides = elliptic_det_lemma_sides(pb);
    CHECK(sides.ratio_error() < 1e-8);
    if (n == 1) CHECK(sides.det == C(1));

    // X_i = 1/A_i makes the matrix upper triangular.
    for (std::size_t i = 0; i < n; ++i) pb.X[i] = C(1) / pb.A[i];
    const auto m = elliptic_det_lemma_matrix(pb);
    C diag(1);
    for (int i = 0; i < static_cast<int>(n); ++i) {
      diag *= m(i, i);
      for (int j = 0; j < i; ++j) CHECK(std::abs(m(i, j)) <= 1e-12 * m.row_max_abs(i));
    }
    CHECK(relative_error(diag, elliptic_det_lemma_product(pb)) < 1e-10);
  }
}

TEST_CASE("P-family invariants and row proportionality") {
  const PFamily<double> P{C(1.1, -0.3), C(0.7, 0.6), kNome, 4};
  Rng rng(32);
  for (int t = 0; t < 50; ++t) CHECK(p_family_invariant_residual(P, rng.polar(0.5, 2)) < 1e-10);
  EllipticDetProblem<double> pb{{C(1.3, 0.4), C(-0.6, 0.9), C(0.5, -1.2)},
                                {C(0.8, 0.2), C(1.2, 0.5), C(-0.7, 0.4)},
                                P.B,
                                P.C,
                                kNome};
  CHECK(row_proportionality_residual(pb, 0, 2) < 1e-10);
  CHECK(row_proportionality_residual(pb, 1, 0) < 1e-10);
}

TEST_CASE("theta determinant at n = 2 is the addition formula") {
  const C p(0.12, 0.03);
  const std::vector<C> X{C(0.31, 0.05), C(-0.27, 0.11)};
  const C A(0.13, -0.04), B(0.41, 0.02), Cc(0.22, 0.07);
  const auto sides = theta_det_sides<double>(X, A, B, Cc, p);
  CHECK(sides.ratio_error() < 1e-8);

  // At n = 2 the determinant is a difference of two four-theta products.
  auto th = [&](C z) { return theta1(z, p); };
  const C d = th(A + X[0]) * th(A + Cc - X[0]) * th(B + X[1]) * th(B + Cc - X[1]) -
              th(A + X[1]) * th(A + Cc - X[1]) * th(B + X[0]) * th(B + Cc - X[0]);
  CHECK(relative_error(sides.det, d) < 1e-12);
  const C rhs = th(X[0] - X[1]) * th(Cc - X[0] - X[1]) * th(B - A) * th(A + B + Cc);
  CHECK(relative_error(d, rhs) < 1e-10);

  std::vector<C> three{C(0.31, 0.05), C(-0.27, 0.11), C(0.12, -0.2)};
  CHECK(theta_det_sides<double>(three, A, B, Cc, p).ratio_error() < 1e-8);
}

TEST_CASE("determinant suite runs clean") {
  SuiteOptions opt;
  opt.trials = 10;
  opt.seed = 5;
  const auto report = run_suite("determinants", opt);
  CHECK(report.passed());
}
