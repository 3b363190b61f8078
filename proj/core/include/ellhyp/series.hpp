#pragma once

// Terminating, balanced, very-well-poised elliptic series
//   r+1 omega r (a1; a4, ..., a_{r+1}; q, p)
// summed directly over k = 0..n_term.

#include <string>
#include <vector>

#include "ellhyp/kernel.hpp"

namespace ellhyp {

enum class BalanceMode { Strict, Lenient };

struct SeriesOptions {
  BalanceMode balance = BalanceMode::Strict;
  double balance_tolerance = 1e-8;
  TruncationPolicy truncation{};
};

/// The terminating upper parameter q^{-n_term} is inserted by the
/// evaluator; `upper` holds the remaining a4..a_r.
template <std::floating_point R>
struct OmegaSpec {
  Complex<R> a1;
  std::vector<Complex<R>> upper;
  Nome<R> nome;
  int n_term = 0;

  /// r in r+1 omega r.
  int order() const { return static_cast<int>(upper.size()) + 3; }

  Complex<R> terminator() const { return ipow(nome.q, -n_term); }
};

/// A finished sum together with the scales needed to judge it.
template <std::floating_point R>
struct SeriesSum {
  Complex<R> value;
  R abs_sum{0};
  R max_term{0};

  R condition() const {
    const R v = std::abs(value);
    return v == R(0) ? std::numeric_limits<R>::infinity() : abs_sum / v;
  }
};

/// Scale-normalized |(a4...a_{r+1})^2 - a1^{r-3} q^{r-5}|.
template <std::floating_point R>
R balance_residual(const OmegaSpec<R>& spec) {
  Complex<R> product = spec.terminator();
  for (const auto& a : spec.upper) product *= a;
  const int r = spec.order();
  const Complex<R> lhs = product * product;
  const Complex<R> rhs = ipow(spec.a1, r - 3) * ipow(spec.nome.q, r - 5);
  const R scale = std::max(std::abs(lhs), std::abs(rhs));
  return scale == R(0) ? R(0) : std::abs(lhs - rhs) / scale;
}

/// The summands t_0..t_{n_term}, each built from the previous one by the
/// ratio of single E factors.
template <std::floating_point R>
std::vector<Complex<R>> omega_terms(const OmegaSpec<R>& spec, const SeriesOptions& options = {}) {
  spec.nome.validate();
  if (spec.n_term < 0) throw Error(ErrorKind::InvalidArgument, "n_term must be nonnegative");
  if (options.balance == BalanceMode::Strict) {
    const R residual = balance_residual(spec);
    if (residual > R(options.balance_tolerance))
      throw Error(ErrorKind::BalanceViolation, "balancing condition off by " + std::to_string(static_cast<double>(residual)));
  }

  const auto& policy = options.truncation;
  const Complex<R> q = spec.nome.q;
  const Complex<R> p = spec.nome.p;
  std::vector<Complex<R>> numer{spec.a1};
  numer.insert(numer.end(), spec.upper.begin(), spec.upper.end());
  numer.push_back(spec.terminator());
  std::vector<Complex<R>> denom{q};
  for (std::size_t i = 1; i < numer.size(); ++i) denom.push_back(spec.a1 * q / numer[i]);

  const Complex<R> vwp_base = eval_E_denominator(spec.a1, p, "very-well-poised factor E(a1)", policy);
  std::vector<Complex<R>> terms{Complex<R>(1)};
  Complex<R> ratio(1);
  for (int k = 1; k <= spec.n_term; ++k) {
    const Complex<R> shift = ipow(q, k - 1);
    for (const auto& a : numer) ratio *= eval_E(a * shift, p, policy);
    for (const auto& b : denom) {
      const Complex<R> arg = b * shift;
      if (near_zero_of_E(arg, p))
        throw Error(ErrorKind::DegenerateParameters,
                    "omega denominator E(" + format_complex(arg) + ") vanishes at k=" + std::to_string(k));
      ratio /= eval_E(arg, p, policy);
    }
    ratio *= q;
    terms.push_back(eval_E(spec.a1 * ipow(q, 2 * k), p, policy) / vwp_base * ratio);
  }
  return terms;
}

/// Summands accumulated left to right with compensated summation.
template <std::floating_point R>
SeriesSum<R> sum_omega(const OmegaSpec<R>& spec, const SeriesOptions& options = {}) {
  SumAccumulator<R> acc;
  for (const auto& t : omega_terms(spec, options)) acc.add(t);
  return {acc.value(), acc.abs_sum(), acc.max_abs()};
}

template <std::floating_point R>
Complex<R> eval_omega(const OmegaSpec<R>& spec, const SeriesOptions& options = {}) {
  return sum_omega(spec, options).value;
}

}  // namespace ellhyp
