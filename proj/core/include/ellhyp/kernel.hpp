#pragma once

// Elliptic building blocks: E(x;p) = (x;p)_inf (p/x;p)_inf, the elliptic
// shifted factorials built from it, and the Jacobi theta function theta_1.

#include <cmath>
#include <initializer_list>
#include <span>
#include <string>

#include "ellhyp/error.hpp"
#include "ellhyp/numeric.hpp"
#include "ellhyp/partition.hpp"

namespace ellhyp {

/// Factors whose reduced distance to a zero of E falls below this are
/// reported as DegenerateParameters when they would be divided by.
inline constexpr double kDegeneracyThreshold = 1e-8;

struct TruncationPolicy {
  int min_terms = 30;
  double tail_bound = 1e-18;

  /// Number of factors K kept in (x;p)_inf so that |p|^K * scale < tail_bound.
  template <std::floating_point R>
  int terms_for(R abs_p, R scale) const {
    if (abs_p == R(0)) return 1;
    const R needed = std::log(R(tail_bound) / std::max(R(1), scale)) / std::log(abs_p);
    return std::max(min_terms, static_cast<int>(std::ceil(needed)) + 10);
  }
};

/// The pair (q, p) of bases. Only q != 0 and |p| < 1 are required: every
/// series in this library terminates, so |q| < 1 is never needed.
template <std::floating_point R>
struct Nome {
  Complex<R> q;
  Complex<R> p;

  void validate() const {
    if (q == Complex<R>(0)) throw Error(ErrorKind::NonzeroRequired, "base q must be nonzero");
    if (!(std::abs(p) < R(1))) throw Error(ErrorKind::NomeOutOfRange, "elliptic nome needs |p| < 1");
  }

  /// Same elliptic nome, base replaced (e.g. q -> q^r).
  Nome with_base(Complex<R> base) const { return {base, p}; }
  Nome power_base(int r) const { return {ipow(q, r), p}; }
};

namespace detail {

template <std::floating_point R>
void require_nome(const Complex<R>& p) {
  if (!(std::abs(p) < R(1))) throw Error(ErrorKind::NomeOutOfRange, "elliptic nome needs |p| < 1, got " + format_complex(p));
}

}  // namespace detail

/// (a;p)_inf truncated per policy; exact 1 - a style products when p == 0
/// are handled by the callers.
template <std::floating_point R>
Complex<R> qpochhammer_infinite(Complex<R> a, Complex<R> base, const TruncationPolicy& policy = {}) {
  detail::require_nome(base);
  const int terms = policy.terms_for(std::abs(base), std::abs(a));
  Complex<R> result(1), power(1);
  for (int k = 0; k < terms; ++k) {
    result *= Complex<R>(1) - a * power;
    power *= base;
    if (power == Complex<R>(0)) break;
  }
  return result;
}

/// E(x;p). Exactly 1 - x for p = 0.
template <std::floating_point R>
Complex<R> eval_E(Complex<R> x, Complex<R> p, const TruncationPolicy& policy = {}) {
  if (x == Complex<R>(0)) throw Error(ErrorKind::NonzeroRequired, "E(x;p) needs x != 0");
  detail::require_nome(p);
  if (p == Complex<R>(0)) return Complex<R>(1) - x;

  const R scale = std::max(std::abs(x), R(1) / std::abs(x));
  const int terms = policy.terms_for(std::abs(p), scale);
  const Complex<R> one(1);
  Complex<R> result(1), pk(1);
  for (int k = 0; k < terms; ++k) {
    const Complex<R> pk1 = pk * p;
    result *= (one - x * pk) * (one - pk1 / x);
    pk = pk1;
    if (pk == Complex<R>(0)) break;
  }
  return result;
}

/// True when x lies within kDegeneracyThreshold of a zero p^k of E(.;p),
/// measured after reducing x into the annulus |p| < |y| <= 1.
template <std::floating_point R>
bool near_zero_of_E(Complex<R> x, Complex<R> p) {
  const R delta = R(kDegeneracyThreshold);
  if (x == Complex<R>(0)) return true;
  if (p == Complex<R>(0)) return std::abs(Complex<R>(1) - x) < delta;
  const R log_p = std::log(std::abs(p));
  const R shift = std::floor(std::log(std::abs(x)) / log_p);
  Complex<R> y = x / std::pow(p, Complex<R>(shift));
  // Guard against the floor landing one step off because of rounding.
  if (std::abs(y) > R(1)) y *= p;
  return std::abs(Complex<R>(1) - y) < delta || std::abs(Complex<R>(1) - p / y) < delta;
}

/// E(x;p) that is about to be divided by: throws DegenerateParameters near a zero.
template <std::floating_point R>
Complex<R> eval_E_denominator(Complex<R> x, Complex<R> p, const char* where = "denominator",
                              const TruncationPolicy& policy = {}) {
  if (x != Complex<R>(0) && near_zero_of_E(x, p))
    throw Error(ErrorKind::DegenerateParameters, std::string(where) + ": E(" + format_complex(x) + ") vanishes");
  return eval_E(x, p, policy);
}

/// Elliptic shifted factorial (a;q,p)_n for every integer n. The negative
/// branch is the reciprocal 1/(a q^n;q,p)_{-n} with its factors checked.
template <std::floating_point R>
Complex<R> pochhammer_e(Complex<R> a, const Nome<R>& nome, int n, const TruncationPolicy& policy = {}) {
  Complex<R> result(1);
  if (n >= 0) {
    for (int k = 0; k < n; ++k) result *= eval_E(a * ipow(nome.q, k), nome.p, policy);
    return result;
  }
  for (int k = 0; k < -n; ++k)
    result *= eval_E_denominator(a * ipow(nome.q, n + k), nome.p, "negative-index Pochhammer", policy);
  return Complex<R>(1) / result;
}

/// (a;q,p)_n intended for a denominator: nonnegative n has its factors
/// checked for degeneracy, negative n falls back to the reciprocal branch.
template <std::floating_point R>
Complex<R> pochhammer_e_denominator(Complex<R> a, const Nome<R>& nome, int n, const TruncationPolicy& policy = {}) {
  if (n < 0) return pochhammer_e(a, nome, n, policy);
  Complex<R> result(1);
  for (int k = 0; k < n; ++k) result *= eval_E_denominator(a * ipow(nome.q, k), nome.p, "Pochhammer denominator", policy);
  return result;
}

/// Condensed notation (a_1,...,a_m;q,p)_n.
template <std::floating_point R>
Complex<R> pochhammer_multi(std::span<const Complex<R>> as, const Nome<R>& nome, int n,
                            const TruncationPolicy& policy = {}) {
  if (as.empty()) throw Error(ErrorKind::InvalidArgument, "pochhammer_multi needs at least one parameter");
  Complex<R> result(1);
  for (const auto& a : as) result *= pochhammer_e(a, nome, n, policy);
  return result;
}

template <std::floating_point R>
Complex<R> pochhammer_multi(std::initializer_list<Complex<R>> as, const Nome<R>& nome, int n,
                            const TruncationPolicy& policy = {}) {
  return pochhammer_multi(std::span<const Complex<R>>(as.begin(), as.size()), nome, n, policy);
}

/// 1/(q^m;q,p)_n with q-power arguments formed exactly, so that for n < 0
/// the factor E(q^0) = E(1) = 0 appears as an exact zero.
template <std::floating_point R>
Complex<R> reciprocal_pochhammer_qpower(int m, const Nome<R>& nome, int n, const TruncationPolicy& policy = {}) {
  Complex<R> product(1);
  if (n < 0) {
    for (int k = 0; k < -n; ++k) {
      const int exponent = m + n + k;
      if (exponent == 0) return Complex<R>(0);
      product *= eval_E(ipow(nome.q, exponent), nome.p, policy);
    }
    return product;
  }
  for (int k = 0; k < n; ++k) {
    const int exponent = m + k;
    if (exponent == 0) throw Error(ErrorKind::DegenerateParameters, "(q^m;q,p)_n contains E(1) = 0");
    product *= eval_E_denominator(ipow(nome.q, exponent), nome.p, "q-power Pochhammer", policy);
  }
  return Complex<R>(1) / product;
}

/// Partition-indexed factorial prod_i (a x^{1-i};q,p)_{lambda_i}.
template <std::floating_point R>
Complex<R> pochhammer_partition(Complex<R> a, const Nome<R>& nome, Complex<R> x, const Partition& lambda,
                                const TruncationPolicy& policy = {}) {
  if (x == Complex<R>(0)) throw Error(ErrorKind::NonzeroRequired, "partition Pochhammer needs x != 0");
  Complex<R> result(1), shift(1);
  for (int i = 0; i < lambda.nparts(); ++i) {
    result *= pochhammer_e(a * shift, nome, lambda[static_cast<std::size_t>(i)], policy);
    shift /= x;
  }
  return result;
}

/// Denominator variant of pochhammer_partition.
template <std::floating_point R>
Complex<R> pochhammer_partition_denominator(Complex<R> a, const Nome<R>& nome, Complex<R> x, const Partition& lambda,
                                            const TruncationPolicy& policy = {}) {
  if (x == Complex<R>(0)) throw Error(ErrorKind::NonzeroRequired, "partition Pochhammer needs x != 0");
  Complex<R> result(1), shift(1);
  for (int i = 0; i < lambda.nparts(); ++i) {
    result *= pochhammer_e_denominator(a * shift, nome, lambda[static_cast<std::size_t>(i)], policy);
    shift /= x;
  }
  return result;
}

/// theta_1(z) = i p^{1/4} e^{-iz} (p^2;p^2)_inf E(e^{2iz};p^2), principal p^{1/4}.
template <std::floating_point R>
Complex<R> theta1(Complex<R> z, Complex<R> p, const TruncationPolicy& policy = {}) {
  detail::require_nome(p);
  const Complex<R> i(0, 1);
  if (p == Complex<R>(0)) return Complex<R>(0);
  const Complex<R> p2 = p * p;
  const Complex<R> w = std::exp(R(2) * i * z);
  return i * std::pow(p, Complex<R>(R(0.25))) * std::exp(-i * z) * qpochhammer_infinite(p2, p2, policy) *
         eval_E(w, p2, policy);
}

}  // namespace ellhyp
