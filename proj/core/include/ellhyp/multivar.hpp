#pragma once

// Multivariable series: the C_n Jackson sum over k in [0,N]^n and the
// partition-indexed Omega series in a single extra variable x.

#include <string>
#include <utility>
#include <vector>

#include "ellhyp/kernel.hpp"
#include "ellhyp/partition.hpp"
#include "ellhyp/series.hpp"

namespace ellhyp {

/// Brute-force n-fold sums are refused above this many terms.
inline constexpr long long kMaxBruteForceTerms = 100000;

template <std::floating_point R>
struct CnPoint {
  std::vector<Complex<R>> x;  // x_1..x_n; only x[0] is used by the Omega series
  Complex<R> a, b, c, d, e, f, g;
  int N = 0;
  int n = 1;
  Nome<R> nome;
};

template <std::floating_point R>
struct Sides {
  Complex<R> lhs;
  Complex<R> rhs;
  /// sum |term| / |sum| of the side that was summed term by term.
  R condition{1};

  R rel_error() const { return relative_error(lhs, rhs); }
};

/// e = a^2 q^{N-n+2} / (bcd).
template <std::floating_point R>
Complex<R> cn_jackson_e(const CnPoint<R>& pt) {
  return pt.a * pt.a * ipow(pt.nome.q, pt.N - pt.n + 2) / (pt.b * pt.c * pt.d);
}

enum class SummationOrder { Forward, Reverse };

template <std::floating_point R>
Sides<R> cn_jackson_sides(const CnPoint<R>& pt, SummationOrder order = SummationOrder::Forward) {
  pt.nome.validate();
  const int n = pt.n, N = pt.N;
  if (n < 1 || static_cast<int>(pt.x.size()) != n) throw Error(ErrorKind::InvalidArgument, "C_n point needs n >= 1 variables");
  if (N < 0) throw Error(ErrorKind::InvalidArgument, "N must be nonnegative");
  long long total = 1;
  for (int i = 0; i < n; ++i) {
    total *= N + 1;
    if (total > kMaxBruteForceTerms)
      throw Error(ErrorKind::InvalidArgument, "(N+1)^n exceeds the brute-force cap of " + std::to_string(kMaxBruteForceTerms));
  }

  const Complex<R> q = pt.nome.q, p = pt.nome.p, a = pt.a;
  const Complex<R> e = pt.e;
  const auto& x = pt.x;
  auto X = [&](int i) { return x[static_cast<std::size_t>(i)]; };

  // Single-variable factors depend only on (i, k_i): tabulate them.
  std::vector<std::vector<Complex<R>>> single(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Complex<R> xi = X(i), ax2 = a * xi * xi;
    const Complex<R> vwp = eval_E_denominator(ax2, p, "E(a x_i^2)");
    for (int k = 0; k <= N; ++k) {
      Complex<R> t = eval_E(ax2 * ipow(q, 2 * k), p) / vwp * ipow(q, (i + 1) * k);
      for (const auto& u : {ax2, pt.b * xi, pt.c * xi, pt.d * xi, e * xi, ipow(q, -N)}) t *= pochhammer_e(u, pt.nome, k);
      for (const auto& v : {q, a * q * xi / pt.b, a * q * xi / pt.c, a * q * xi / pt.d, a * q * xi / e, ax2 * ipow(q, N + 1)})
        t /= pochhammer_e_denominator(v, pt.nome, k);
      single[static_cast<std::size_t>(i)].push_back(t);
    }
  }
  std::vector<Complex<R>> pair_base;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      pair_base.push_back(eval_E_denominator(X(i) / X(j), p, "E(x_i/x_j)") *
                          eval_E_denominator(a * X(i) * X(j) * ipow(q, N), p, "E(a x_i x_j q^N)"));

  SumAccumulator<R> acc;
  std::vector<int> k(static_cast<std::size_t>(n), 0);
  for (long long idx = 0; idx < total; ++idx) {
    long long code = order == SummationOrder::Forward ? idx : total - 1 - idx;
    for (int i = n - 1; i >= 0; --i) {
      k[static_cast<std::size_t>(i)] = static_cast<int>(code % (N + 1));
      code /= N + 1;
    }
    Complex<R> t(1);
    std::size_t pi = 0;
    for (int i = 0; i < n; ++i) {
      const int ki = k[static_cast<std::size_t>(i)];
      t *= single[static_cast<std::size_t>(i)][static_cast<std::size_t>(ki)];
      for (int j = i + 1; j < n; ++j, ++pi) {
        const int kj = k[static_cast<std::size_t>(j)];
        t *= eval_E(ipow(q, ki - kj) * X(i) / X(j), p) * eval_E(a * X(i) * X(j) * ipow(q, ki + kj), p) / pair_base[pi];
      }
    }
    acc.add(t);
  }

  Complex<R> rhs(1);
  for (int i = 1; i <= n; ++i) {
    const Complex<R> xi = X(i - 1), s = a * ipow(q, 2 - i);
    for (const auto& u : {a * q * xi * xi, s / (pt.b * pt.c), s / (pt.b * pt.d), s / (pt.c * pt.d)})
      rhs *= pochhammer_e(u, pt.nome, N);
    for (const auto& v : {a * ipow(q, 2 - n) / (pt.b * pt.c * pt.d * xi), a * q * xi / pt.b, a * q * xi / pt.c, a * q * xi / pt.d})
      rhs /= pochhammer_e_denominator(v, pt.nome, N);
  }
  return {acc.value(), rhs, acc.condition()};
}

/// Scale-normalized residual of (a4...a_{r+1})^2 = a1^{r-3} q^{r-5} x^{2-2n},
/// where `upper` excludes the terminator q^{-N}.
template <std::floating_point R>
R omega_balance_residual(Complex<R> a1, const std::vector<Complex<R>>& upper, const Nome<R>& nome, Complex<R> x,
                         int nparts, int N) {
  Complex<R> prod = ipow(nome.q, -N);
  for (const auto& u : upper) prod *= u;
  const int r = static_cast<int>(upper.size()) + 3;
  const Complex<R> lhs = prod * prod;
  const Complex<R> rhs = ipow(a1, r - 3) * ipow(nome.q, r - 5) * ipow(x, 2 - 2 * nparts);
  return std::abs(lhs - rhs) / std::max(std::abs(lhs), std::abs(rhs));
}

/// Summand of the Omega series at partition_lambda.
template <std::floating_point R>
Complex<R> omega_partition_term(Complex<R> a1, const std::vector<Complex<R>>& numer, const Nome<R>& nome, Complex<R> x,
                                const Partition& partition_lambda) {
  const Complex<R> q = nome.q, p = nome.p;
  const int n = partition_lambda.nparts();
  auto lam = [&](int i) { return partition_lambda[static_cast<std::size_t>(i - 1)]; };

  // E(base q^shift)/E(base), exactly 1 at shift 0 so that the empty
  // partition contributes exactly 1.
  auto shifted = [&](Complex<R> base, int shift, const char* what) {
    if (shift == 0) return Complex<R>(1);
    return eval_E(base * ipow(q, shift), p) / eval_E_denominator(base, p, what);
  };
  Complex<R> t = ipow(q, partition_lambda.size()) * ipow(x, 2 * partition_lambda.weighted_size());
  for (int i = 1; i <= n; ++i) t *= shifted(a1 * ipow(x, 2 * (1 - i)), 2 * lam(i), "Omega very-well-poised factor");
  t *= pochhammer_partition(a1 * ipow(x, 1 - n), nome, x, partition_lambda) /
       pochhammer_partition_denominator(q * ipow(x, n - 1), nome, x, partition_lambda);
  for (const auto& u : numer)
    t *= pochhammer_partition(u, nome, x, partition_lambda) /
         pochhammer_partition_denominator(a1 * q / u, nome, x, partition_lambda);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const int li = lam(i), lj = lam(j);
      const Complex<R> xd = ipow(x, j - i), xs = a1 * ipow(x, 2 - i - j);
      t *= shifted(xd, li - lj, "E(x^{j-i})");
      t *= shifted(xs, li + lj, "Omega cross factor");
      t *= pochhammer_e(a1 * ipow(x, 3 - i - j), nome, li + lj) * pochhammer_e(ipow(x, j - i + 1), nome, li - lj);
      t /= pochhammer_e_denominator(a1 * q * ipow(x, 1 - i - j), nome, li + lj) *
           pochhammer_e_denominator(q * ipow(x, j - i - 1), nome, li - lj);
    }
  return t;
}

/// The Omega series with nparts rows, summed over partitions with
/// lambda_1 <= N (all others vanish because of q^{-N}).
template <std::floating_point R>
SeriesSum<R> sum_Omega(Complex<R> a1, const std::vector<Complex<R>>& upper, const Nome<R>& nome, Complex<R> x,
                       int nparts, int N, const SeriesOptions& options = {}) {
  nome.validate();
  if (x == Complex<R>(0)) throw Error(ErrorKind::NonzeroRequired, "Omega series needs x != 0");
  if (options.balance == BalanceMode::Strict) {
    const R residual = omega_balance_residual(a1, upper, nome, x, nparts, N);
    if (residual > R(options.balance_tolerance))
      throw Error(ErrorKind::BalanceViolation, "Omega balancing condition off by " + std::to_string(static_cast<double>(residual)));
  }
  std::vector<Complex<R>> numer = upper;
  numer.push_back(ipow(nome.q, -N));
  SumAccumulator<R> acc;
  for_each_partition(nparts, N, [&](const Partition& partition_lambda) {
    acc.add(omega_partition_term(a1, numer, nome, x, partition_lambda));
  });
  return {acc.value(), acc.abs_sum(), acc.max_abs()};
}

template <std::floating_point R>
Complex<R> eval_Omega(Complex<R> a1, const std::vector<Complex<R>>& upper, const Nome<R>& nome, Complex<R> x,
                      int nparts, int N, const SeriesOptions& options = {}) {
  return sum_Omega(a1, upper, nome, x, nparts, N, options).value;
}

/// x = 1 collapse: sum over multiplicity vectors (m_0..m_N), sum m_k = nparts,
/// of nparts!/(m_0!...m_N!) prod_i t_{lambda_i}, with t_k the one-variable
/// summand. Multiplicity vectors correspond one-to-one to partitions.
template <std::floating_point R>
Complex<R> eval_Omega_at_x1(Complex<R> a1, const std::vector<Complex<R>>& upper, const Nome<R>& nome, int nparts, int N,
                            const SeriesOptions& options = {}) {
  OmegaSpec<R> spec{a1, upper, nome, N};
  if (options.balance == BalanceMode::Strict && balance_residual(spec) > R(options.balance_tolerance))
    throw Error(ErrorKind::BalanceViolation, "balancing condition violated at x = 1");

  const Complex<R> q = nome.q, p = nome.p;
  std::vector<Complex<R>> numer{a1};
  numer.insert(numer.end(), upper.begin(), upper.end());
  numer.push_back(spec.terminator());
  std::vector<Complex<R>> terms;
  const Complex<R> vwp = eval_E_denominator(a1, p, "very-well-poised factor E(a1)");
  for (int k = 0; k <= N; ++k) {
    Complex<R> t = eval_E(a1 * ipow(q, 2 * k), p) / vwp * ipow(q, k) / pochhammer_e_denominator(q, nome, k);
    for (const auto& u : numer) t *= pochhammer_e(u, nome, k);
    for (std::size_t i = 1; i < numer.size(); ++i) t /= pochhammer_e_denominator(a1 * q / numer[i], nome, k);
    terms.push_back(t);
  }

  std::vector<R> factorial{R(1)};
  for (int m = 1; m <= nparts; ++m) factorial.push_back(factorial.back() * R(m));
  SumAccumulator<R> acc;
  for_each_partition(nparts, N, [&](const Partition& partition_lambda) {
    Complex<R> t(factorial[static_cast<std::size_t>(nparts)]);
    for (int k = 0; k <= N; ++k) t /= factorial[static_cast<std::size_t>(partition_lambda.multiplicity(k))];
    for (int part : partition_lambda.parts()) t *= terms[static_cast<std::size_t>(part)];
    acc.add(t);
  });
  return acc.value();
}

/// (a;q,p)_{(N^n)} for each entry of `as`, multiplied.
template <std::floating_point R>
Complex<R> rectangle_pochhammer(std::initializer_list<Complex<R>> as, const Nome<R>& nome, Complex<R> x, int nparts,
                                int N, bool denominator = false) {
  const Partition rect = Partition::rectangle(nparts, N);
  Complex<R> out(1);
  for (const auto& a : as)
    out *= denominator ? pochhammer_partition_denominator(a, nome, x, rect) : pochhammer_partition(a, nome, x, rect);
  return out;
}

/// g = a^3 q^{N+2} / (bcdef x^{n-1}).
template <std::floating_point R>
Complex<R> conjecture_g(const CnPoint<R>& pt) {
  return ipow(pt.a, 3) * ipow(pt.nome.q, pt.N + 2) / (pt.b * pt.c * pt.d * pt.e * pt.f * ipow(pt.x.at(0), pt.n - 1));
}

/// Bailey parameter a^2 q / (bcd).
template <std::floating_point R>
Complex<R> bailey_lambda(const CnPoint<R>& pt) {
  return pt.a * pt.a * pt.nome.q / (pt.b * pt.c * pt.d);
}

/// Both sides of the multivariable 10-Omega-9 transformation (not proven;
/// numerical evidence only). The point's g must satisfy the constraint.
template <std::floating_point R>
Sides<R> conjecture_sides(const CnPoint<R>& pt, const SeriesOptions& options = {}) {
  const Complex<R> x = pt.x.at(0), a = pt.a, q = pt.nome.q;
  const Complex<R> lam = bailey_lambda(pt);
  const auto left = sum_Omega(a, {pt.b, pt.c, pt.d, pt.e, pt.f, pt.g}, pt.nome, x, pt.n, pt.N, options);
  const Complex<R> pre =
      rectangle_pochhammer({a * q, a * q / (pt.e * pt.f), lam * q / pt.e, lam * q / pt.f}, pt.nome, x, pt.n, pt.N) /
      rectangle_pochhammer({a * q / pt.e, a * q / pt.f, lam * q / (pt.e * pt.f), lam * q}, pt.nome, x, pt.n, pt.N, true);
  const Complex<R> right =
      eval_Omega(lam, {lam * pt.b / a, lam * pt.c / a, lam * pt.d / a, pt.e, pt.f, pt.g}, pt.nome, x, pt.n, pt.N, options);
  const R cond = left.value == Complex<R>(0) ? std::numeric_limits<R>::infinity() : left.abs_sum / std::abs(left.value);
  return {left.value, pre * right, cond};
}

/// e = a^2 q^{N+1} / (bcd x^{n-1}).
template <std::floating_point R>
Complex<R> omega87_e(const CnPoint<R>& pt) {
  return pt.a * pt.a * ipow(pt.nome.q, pt.N + 1) / (pt.b * pt.c * pt.d * ipow(pt.x.at(0), pt.n - 1));
}

/// The 8-Omega-7 summation obtained from the transformation; uses b,c,d,e.
template <std::floating_point R>
Sides<R> omega87_sides(const CnPoint<R>& pt, const SeriesOptions& options = {}) {
  const Complex<R> x = pt.x.at(0), a = pt.a, q = pt.nome.q, b = pt.b, c = pt.c, d = pt.d;
  const auto left = sum_Omega(a, {b, c, d, pt.e}, pt.nome, x, pt.n, pt.N, options);
  const Complex<R> right =
      rectangle_pochhammer({a * q, a * q / (b * c), a * q / (b * d), a * q / (c * d)}, pt.nome, x, pt.n, pt.N) /
      rectangle_pochhammer({a * q / b, a * q / c, a * q / d, a * q / (b * c * d)}, pt.nome, x, pt.n, pt.N, true);
  const R cond = left.value == Complex<R>(0) ? std::numeric_limits<R>::infinity() : left.abs_sum / std::abs(left.value);
  return {left.value, right, cond};
}

}  // namespace ellhyp
