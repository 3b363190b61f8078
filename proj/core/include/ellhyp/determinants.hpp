#pragma once

// Structured matrices with closed-form determinants. Each *_sides function
// returns the numerical determinant next to the product formula.

#include <functional>
#include <span>
#include <vector>

#include "ellhyp/kernel.hpp"
#include "ellhyp/matrix.hpp"

namespace ellhyp {

template <std::floating_point R>
struct DetSides {
  Complex<R> det;
  Complex<R> product;
  R condition{1};

  R ratio_error() const { return std::abs(det / product - Complex<R>(1)); }
};

namespace detail {

template <std::floating_point R>
Complex<R> poch_list(std::initializer_list<Complex<R>> as, const Nome<R>& nome, int n) {
  Complex<R> out(1);
  for (const auto& a : as) out *= pochhammer_e(a, nome, n);
  return out;
}

template <std::floating_point R>
Complex<R> poch_list_den(std::initializer_list<Complex<R>> as, const Nome<R>& nome, int n) {
  Complex<R> out(1);
  for (const auto& a : as) out *= pochhammer_e_denominator(a, nome, n);
  return out;
}

inline long long binom2(long long n) { return n * (n - 1) / 2; }

}  // namespace detail

/// M_{ij}, 1 <= i,j <= n. Entries with i < j use negative-length factorials;
/// the q-power factor 1/(q^{i+1};q,p)_{i-j} is formed exactly so that its
/// structural zeros (2i-j+1 <= 0) come out as exact zeros.
template <std::floating_point R>
Matrix<R> andrews_stanton_matrix(Complex<R> x, Complex<R> y, const Nome<R>& nome, int n) {
  const Complex<R> q = nome.q;
  const Nome<R> q2 = nome.power_base(2);
  Matrix<R> m(n, n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const int len = i - j;
      const Complex<R> rec = reciprocal_pochhammer_qpower(i + 1, nome, len);
      if (rec == Complex<R>(0)) continue;
      const Complex<R> num = detail::poch_list({y * ipow(q, 1 - i) / x, ipow(q, 2 - i) / (x * y),
                                                ipow(q, 2 - 4 * i) / (x * x)}, q2, len);
      const Complex<R> den = detail::poch_list_den({ipow(q, 2 - 2 * i) / (x * y), y * ipow(q, 1 - 2 * i) / x}, nome, len);
      m(i - 1, j - 1) = num / den * rec;
    }
  }
  return m;
}

template <std::floating_point R>
Complex<R> andrews_stanton_product(Complex<R> x, Complex<R> y, const Nome<R>& nome, int n) {
  const Complex<R> q = nome.q;
  const Nome<R> q2 = nome.power_base(2);
  Complex<R> out(1);
  for (int i = 1; i <= n; ++i) {
    const Complex<R> x2 = x * x * ipow(q, 2 * i - 2);
    const Complex<R> u = x * y * ipow(q, i - 1), v = x * ipow(q, i) / y;
    out *= pochhammer_e(q, nome, i) * pochhammer_e(x2, nome, i) /
           (pochhammer_e_denominator(q, q2, i) * pochhammer_e_denominator(x2, q2, i));
    out *= pochhammer_e(u, q2, i) * pochhammer_e(v, q2, i) /
           (pochhammer_e_denominator(u, nome, i) * pochhammer_e_denominator(v, nome, i));
  }
  return out;
}

template <std::floating_point R>
DetSides<R> andrews_stanton_sides(Complex<R> x, Complex<R> y, const Nome<R>& nome, int n) {
  const auto det = det_numeric(andrews_stanton_matrix(x, y, nome, n));
  return {det.value, andrews_stanton_product(x, y, nome, n), det.condition};
}

/// Gauss decomposition M U = L with U unit upper triangular.
template <std::floating_point R>
struct LUFactors {
  Matrix<R> U;
  std::vector<Complex<R>> L_diag;
};

template <std::floating_point R>
LUFactors<R> andrews_stanton_lu(Complex<R> x, Complex<R> y, const Nome<R>& nome, int n) {
  const Complex<R> q = nome.q, p = nome.p;
  const Nome<R> q2 = nome.power_base(2);
  LUFactors<R> out{Matrix<R>(n, n), {}};
  const Complex<R> x2 = x * x;
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      const int m = j - i;
      const Complex<R> sign((i + j) % 2 ? R(-1) : R(1));
      // q^{(i-j)(i+j-7)/2}; the exponent is always an integer.
      const Complex<R> qpow = ipow(q, (i - j) * (i + j - 7) / 2);
      const Complex<R> num = eval_E(x2 * ipow(q, 3 * i - 2), p) * pochhammer_e(ipow(q, i), nome, 2 * m) *
                             pochhammer_e(ipow(q, 3 - 3 * j) / x2, nome, m);
      const Complex<R> den = eval_E_denominator(x2 * ipow(q, i + 2 * j - 2), p, "LU factor") *
                             detail::poch_list_den({q2.q, ipow(q, 4 - 4 * j) / x2, ipow(q, 3 - 2 * j) / x2}, q2, m);
      out.U(i - 1, j - 1) = sign * qpow * num / den;
    }
    const int m = i - 1;
    const Complex<R> u = x * y, v = x / y;
    const Complex<R> num = pochhammer_e(q2.q, nome, m) * pochhammer_e(x2 * ipow(q, 2 * i - 1), nome, m) *
                           pochhammer_e(u * ipow(q, i + 1), q2, m) * pochhammer_e(v * ipow(q, i + 2), q2, m);
    const Complex<R> den = pochhammer_e_denominator(ipow(q, 3), q2, m) *
                           pochhammer_e_denominator(x2 * ipow(q, 2 * i), q2, m) *
                           pochhammer_e_denominator(u * ipow(q, i), nome, m) *
                           pochhammer_e_denominator(v * ipow(q, i + 1), nome, m);
    out.L_diag.push_back(num / den);
  }
  return out;
}

/// Residuals of the LU replay: largest row-normalized entry of M U above the
/// diagonal, and largest relative deviation of its diagonal from L_diag.
template <std::floating_point R>
std::pair<R, R> lu_replay_residuals(const Matrix<R>& M, const LUFactors<R>& lu) {
  const Matrix<R> L = M * lu.U;
  R upper(0), diag(0);
  for (int i = 0; i < L.rows(); ++i) {
    const R scale = L.row_max_abs(i);
    for (int j = i + 1; j < L.cols(); ++j) upper = std::max(upper, std::abs(L(i, j)) / scale);
    diag = std::max(diag, std::abs(L(i, i) / lu.L_diag[static_cast<std::size_t>(i)] - Complex<R>(1)));
  }
  return {upper, diag};
}

/// det[(A X_i, AC/X_i)_{n-j} / (B X_i, BC/X_i)_{n-j}] and its product form.
template <std::floating_point R>
DetSides<R> corollary_determ_sides(std::span<const Complex<R>> X, Complex<R> A, Complex<R> B, Complex<R> C,
                                   const Nome<R>& nome) {
  const int n = static_cast<int>(X.size());
  const Complex<R> q = nome.q, p = nome.p;
  Matrix<R> m(n, n);
  for (int i = 0; i < n; ++i) {
    const Complex<R> xi = X[static_cast<std::size_t>(i)];
    for (int j = 1; j <= n; ++j)
      m(i, j - 1) = detail::poch_list({A * xi, A * C / xi}, nome, n - j) /
                    detail::poch_list_den({B * xi, B * C / xi}, nome, n - j);
  }
  const auto det = det_numeric(m);

  Complex<R> prod = ipow(A, detail::binom2(n)) * ipow(q, static_cast<long long>(n) * (n - 1) * (n - 2) / 6);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Complex<R> xi = X[static_cast<std::size_t>(i)], xj = X[static_cast<std::size_t>(j)];
      prod *= xj * eval_E(xi / xj, p) * eval_E(C / (xi * xj), p);
    }
  for (int i = 1; i <= n; ++i) {
    const Complex<R> xi = X[static_cast<std::size_t>(i - 1)];
    prod *= detail::poch_list({B / A, A * B * C * ipow(q, 2 * n - 2 * i)}, nome, i - 1) /
            detail::poch_list_den({B * xi, B * C / xi}, nome, n - 1);
  }
  return {det.value, prod, det.condition};
}

/// The shipped P-family P_j(X) = (B X q^{n-j-1}, B C q^{n-j-1}/X; q,p)_j.
template <std::floating_point R>
struct PFamily {
  Complex<R> B, C;
  Nome<R> nome;
  int n = 1;

  Complex<R> operator()(int j, Complex<R> X) const {
    const Complex<R> shift = ipow(nome.q, n - j - 1);
    return pochhammer_e(B * X * shift, nome, j) * pochhammer_e(B * C * shift / X, nome, j);
  }
};

template <std::floating_point R>
struct EllipticDetProblem {
  std::vector<Complex<R>> X, A;
  Complex<R> B, C;
  Nome<R> nome;
};

template <std::floating_point R>
Matrix<R> elliptic_det_lemma_matrix(const EllipticDetProblem<R>& pb) {
  const int n = static_cast<int>(pb.X.size());
  if (pb.A.size() != pb.X.size()) throw Error(ErrorKind::InvalidArgument, "X and A lists differ in length");
  const PFamily<R> P{pb.B, pb.C, pb.nome, n};
  const Complex<R> p = pb.nome.p;
  Matrix<R> m(n, n);
  for (int i = 0; i < n; ++i) {
    const Complex<R> xi = pb.X[static_cast<std::size_t>(i)];
    for (int j = 1; j <= n; ++j) {
      Complex<R> v = P(j - 1, xi);
      for (int k = j + 1; k <= n; ++k) {
        const Complex<R> ak = pb.A[static_cast<std::size_t>(k - 1)];
        v *= eval_E(ak * xi, p) * eval_E(pb.C * ak / xi, p);
      }
      m(i, j - 1) = v;
    }
  }
  return m;
}

template <std::floating_point R>
Complex<R> elliptic_det_lemma_product(const EllipticDetProblem<R>& pb) {
  const int n = static_cast<int>(pb.X.size());
  const PFamily<R> P{pb.B, pb.C, pb.nome, n};
  const Complex<R> p = pb.nome.p;
  Complex<R> prod(1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Complex<R> xi = pb.X[static_cast<std::size_t>(i)], xj = pb.X[static_cast<std::size_t>(j)];
      prod *= pb.A[static_cast<std::size_t>(j)] * xj * eval_E(xi / xj, p) * eval_E(pb.C / (xi * xj), p);
    }
  for (int i = 0; i < n; ++i) prod *= P(i, Complex<R>(1) / pb.A[static_cast<std::size_t>(i)]);
  return prod;
}

template <std::floating_point R>
DetSides<R> elliptic_det_lemma_sides(const EllipticDetProblem<R>& pb) {
  const auto det = det_numeric(elliptic_det_lemma_matrix(pb));
  return {det.value, elliptic_det_lemma_product(pb), det.condition};
}

/// Worst deviation of the P-family from P_j(pX) = (C/(X^2 p))^j P_j(X) and
/// P_j(C/X) = P_j(X), over j < n at the given X.
template <std::floating_point R>
R p_family_invariant_residual(const PFamily<R>& P, Complex<R> X) {
  const Complex<R> p = P.nome.p;
  R worst(0);
  for (int j = 0; j < P.n; ++j) {
    const Complex<R> base = P(j, X);
    worst = std::max(worst, relative_error(P(j, p * X), ipow(P.C / (X * X * p), j) * base));
    worst = std::max(worst, relative_error(P(j, P.C / X), base));
  }
  return worst;
}

/// With X_i = p X_j the two rows of the lemma's matrix become proportional.
/// Returns the spread of the entrywise ratios row_i / row_j.
template <std::floating_point R>
R row_proportionality_residual(const EllipticDetProblem<R>& pb, int i, int j) {
  EllipticDetProblem<R> moved = pb;
  moved.X[static_cast<std::size_t>(i)] = pb.nome.p * pb.X[static_cast<std::size_t>(j)];
  const Matrix<R> m = elliptic_det_lemma_matrix(moved);
  const Complex<R> first = m(i, 0) / m(j, 0);
  R worst(0);
  for (int col = 1; col < m.cols(); ++col) worst = std::max(worst, relative_error(m(i, col) / m(j, col), first));
  return worst;
}

/// prod_{k<m} theta_1(x + k).
template <std::floating_point R>
Complex<R> theta_shifted_product(Complex<R> x, int m, Complex<R> p) {
  Complex<R> out(1);
  for (int k = 0; k < m; ++k) out *= theta1(x + R(k), p);
  return out;
}

/// Theta-function form of the determinant lemma, with additive parameters.
template <std::floating_point R>
DetSides<R> theta_det_sides(std::span<const Complex<R>> X, Complex<R> A, Complex<R> B, Complex<R> C, Complex<R> p) {
  const int n = static_cast<int>(X.size());
  auto T = [&](int m, Complex<R> x) { return theta_shifted_product(x, m, p); };
  Matrix<R> m(n, n);
  for (int i = 0; i < n; ++i) {
    const Complex<R> xi = X[static_cast<std::size_t>(i)];
    for (int j = 1; j <= n; ++j)
      m(i, j - 1) = T(n - j, A + xi) * T(n - j, A + C - xi) * T(j - 1, B + xi + R(n - j)) *
                    T(j - 1, B + C + R(n - j) - xi);
  }
  const auto det = det_numeric(m);
  Complex<R> prod(1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Complex<R> xi = X[static_cast<std::size_t>(i)], xj = X[static_cast<std::size_t>(j)];
      prod *= theta1(xi - xj, p) * theta1(C - xi - xj, p);
    }
  for (int i = 1; i <= n; ++i) prod *= T(i - 1, B - A) * T(i - 1, A + B + C + R(2 * n - 2 * i));
  return {det.value, prod, det.condition};
}

}  // namespace ellhyp
