#pragma once

// Lower-triangular inverse pairs f, f^{-1} with sum_k f^{-1}_{n,k} f_{k,l} = delta_{n,l},
// plus the elementary identities they are derived from.

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ellhyp/kernel.hpp"
#include "ellhyp/series.hpp"

namespace ellhyp {

/// Pair with stretched base q^r, r a positive integer.
template <std::floating_point R>
struct RStepPair {
  Complex<R> a, b;
  int r = 1;
};

/// Pair with a second, free complex base r.
template <std::floating_point R>
struct RawRPair {
  Complex<R> a, b, r;
};

/// Pair built from arbitrary sequences b_i, c_i (indices 0..size-1).
/// Requires c_i != c_j and a c_i c_j != 1.
template <std::floating_point R>
struct KrattenthalerPair {
  Complex<R> a;
  std::vector<Complex<R>> b_seq, c_seq;

  void validate(Complex<R> p) const {
    if (b_seq.size() != c_seq.size()) throw Error(ErrorKind::InvalidArgument, "b and c sequences differ in length");
    for (std::size_t i = 0; i < c_seq.size(); ++i) {
      for (std::size_t j = 0; j < c_seq.size(); ++j) {
        if (i != j && near_zero_of_E(c_seq[i] / c_seq[j], p))
          throw Error(ErrorKind::DegenerateParameters, "c_i/c_j hits a zero of E at i=" + std::to_string(i) + ", j=" + std::to_string(j));
        if (near_zero_of_E(a * c_seq[i] * c_seq[j], p))
          throw Error(ErrorKind::DegenerateParameters, "a c_i c_j hits a zero of E at i=" + std::to_string(i) + ", j=" + std::to_string(j));
      }
    }
  }
};

template <std::floating_point R>
struct InversePair {
  std::variant<RStepPair<R>, RawRPair<R>, KrattenthalerPair<R>> kind;
  Nome<R> nome;
  /// Lenient pairs return the structural zero above the diagonal instead of throwing.
  bool lenient = false;
};

namespace detail {

template <std::floating_point R>
bool check_triangle(const InversePair<R>& pair, int n, int k) {
  if (n < 0 || k < 0) throw Error(ErrorKind::InvalidArgument, "matrix indices must be nonnegative");
  if (k <= n) return true;
  if (pair.lenient) return false;
  throw Error(ErrorKind::IndexOutOfTriangle, "entry (" + std::to_string(n) + "," + std::to_string(k) + ") lies above the diagonal");
}

template <std::floating_point R>
using Scaled = ScaledProduct<R>;

template <std::floating_point R>
Scaled<R> E_over(Complex<R> num, Complex<R> den, Complex<R> p) {
  return Scaled<R>(eval_E(num, p)) /= eval_E_denominator(den, p);
}

/// (a_1,...;base)_n / (b_1,...;base)_n factor by factor, n >= 0.
template <std::floating_point R>
Scaled<R> poch_ratio(std::initializer_list<Complex<R>> num, std::initializer_list<Complex<R>> den,
                     const Nome<R>& nome, int n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "poch_ratio needs a nonnegative length");
  Scaled<R> out;
  for (const auto& a : num)
    for (int j = 0; j < n; ++j) out *= eval_E(a * ipow(nome.q, j), nome.p);
  for (const auto& b : den)
    for (int j = 0; j < n; ++j) out /= eval_E_denominator(b * ipow(nome.q, j), nome.p, "inverse-pair denominator");
  return out;
}

template <std::floating_point R>
Complex<R> entry(const RStepPair<R>& pr, const Nome<R>& nome, int n, int k) {
  const Complex<R> q = nome.q, p = nome.p, a = pr.a, b = pr.b;
  const int r = pr.r;
  const Nome<R> qr = nome.power_base(r);
  return (E_over(a * b * ipow(q, 2 * r * k), a * b, p) * poch_ratio({a * ipow(q, n)}, {b * ipow(q, 1 - n)}, nome, r * k) *
          poch_ratio({a * b, ipow(q, -r * n)}, {qr.q, a * b * ipow(q, r * n + r)}, qr, k) * ipow(q, r * k))
      .value();
}

template <std::floating_point R>
Complex<R> inverse_entry(const RStepPair<R>& pr, const Nome<R>& nome, int n, int k) {
  const Complex<R> q = nome.q, p = nome.p, a = pr.a, b = pr.b;
  const int r = pr.r;
  const Nome<R> qr = nome.power_base(r);
  Scaled<R> vwp = E_over(a * ipow(q, (r + 1) * k), a, p) * E_over(b * ipow(q, (r - 1) * k), b, p);
  return (poch_ratio({b}, {a * q}, nome, r * n) * vwp * poch_ratio({a, Complex<R>(1) / b}, {}, nome, k) *
          poch_ratio({a * b * ipow(q, r * n), ipow(q, -r * n)}, {qr.q, a * b * qr.q}, qr, k) *
          poch_ratio<R>({}, {ipow(q, 1 - r * n) / b, a * ipow(q, r * n + 1)}, nome, k) * ipow(q, k))
      .value();
}

template <std::floating_point R>
Complex<R> entry(const RawRPair<R>& pr, const Nome<R>& nome, int n, int k) {
  const Complex<R> q = nome.q, a = pr.a, b = pr.b, r = pr.r;
  const Nome<R> rbase = nome.with_base(r);
  const Complex<R> qk = ipow(q, k), rk = ipow(r, k);
  return (poch_ratio({a * qk * rk, qk / (rk * b)}, {}, nome, n - k) *
          poch_ratio<R>({}, {r, a * b * r * rk * rk}, rbase, n - k))
      .value();
}

template <std::floating_point R>
Complex<R> inverse_entry(const RawRPair<R>& pr, const Nome<R>& nome, int n, int k) {
  const Complex<R> q = nome.q, p = nome.p, a = pr.a, b = pr.b, r = pr.r;
  const Nome<R> rbase = nome.with_base(r);
  const int m = n - k;
  // The sign factor carries the second base: (-1)^{n-k} r^{C(n-k,2)}.
  const Complex<R> sign = (m % 2 ? R(-1) : R(1)) * ipow(r, m * (m - 1) / 2);
  const Complex<R> qk = ipow(q, k), rk = ipow(r, k), qn = ipow(q, n), rn = ipow(r, n);
  const Scaled<R> vwp = E_over(a * qk * rk, a * qn * rn, p) * E_over(qk / (rk * b), qn / (rn * b), p);
  return (vwp * sign * poch_ratio({a * qk * q * rn, qk * q / (rn * b)}, {}, nome, m) *
          poch_ratio<R>({}, {r, a * b * rn * rk}, rbase, m))
      .value();
}

template <std::floating_point R>
void require_length(const KrattenthalerPair<R>& pr, int n) {
  if (static_cast<std::size_t>(n) >= pr.c_seq.size() || pr.b_seq.size() != pr.c_seq.size())
    throw Error(ErrorKind::InvalidArgument, "Krattenthaler sequences shorter than index " + std::to_string(n));
}

template <std::floating_point R>
Complex<R> entry(const KrattenthalerPair<R>& pr, const Nome<R>& nome, int n, int k) {
  require_length(pr, n);
  const Complex<R> p = nome.p, a = pr.a;
  const auto& b = pr.b_seq;
  const auto& c = pr.c_seq;
  const auto K = static_cast<std::size_t>(k);
  Complex<R> num(1), den(1);
  for (int j = k; j < n; ++j) {
    const auto J = static_cast<std::size_t>(j);
    num *= eval_E(c[K] * b[J], p) * eval_E(a * c[K] / b[J], p);
  }
  for (int j = k + 1; j <= n; ++j) {
    const auto J = static_cast<std::size_t>(j);
    den *= c[J] * eval_E_denominator(a * c[K] * c[J], p) * eval_E_denominator(c[K] / c[J], p);
  }
  return num / den;
}

template <std::floating_point R>
Complex<R> inverse_entry(const KrattenthalerPair<R>& pr, const Nome<R>& nome, int n, int k) {
  require_length(pr, n);
  const Complex<R> p = nome.p, a = pr.a;
  const auto& b = pr.b_seq;
  const auto& c = pr.c_seq;
  const auto K = static_cast<std::size_t>(k), N = static_cast<std::size_t>(n);
  Complex<R> value = eval_E(c[K] * b[K], p) * eval_E(a * c[K] / b[K], p) /
                     (eval_E_denominator(c[N] * b[N], p) * eval_E_denominator(a * c[N] / b[N], p));
  for (int j = k + 1; j <= n; ++j) {
    const auto J = static_cast<std::size_t>(j);
    value *= eval_E(c[N] * b[J], p) * eval_E(a * c[N] / b[J], p);
  }
  for (int j = k; j < n; ++j) {
    const auto J = static_cast<std::size_t>(j);
    value /= c[J] * eval_E_denominator(a * c[N] * c[J], p) * eval_E_denominator(c[N] / c[J], p);
  }
  return value;
}

}  // namespace detail

template <std::floating_point R>
Complex<R> f_entry(const InversePair<R>& pair, int n, int k) {
  if (!detail::check_triangle(pair, n, k)) return Complex<R>(0);
  return std::visit([&](const auto& kind) { return detail::entry(kind, pair.nome, n, k); }, pair.kind);
}

template <std::floating_point R>
Complex<R> f_inv_entry(const InversePair<R>& pair, int n, int k) {
  if (!detail::check_triangle(pair, n, k)) return Complex<R>(0);
  return std::visit([&](const auto& kind) { return detail::inverse_entry(kind, pair.nome, n, k); }, pair.kind);
}

/// Worst entry of f^{-1} f - I over the triangle 0 <= l <= n <= n_max.
template <std::floating_point R>
struct OrthogonalityResult {
  R residual{0};
  int worst_n = 0, worst_l = 0;
};

/// Each inner sum is normalized by its largest term, since raw entries can
/// span many orders of magnitude.
template <std::floating_point R>
OrthogonalityResult<R> orthogonality_residual(const InversePair<R>& pair, int n_max) {
  if (n_max < 0 || n_max > 12) throw Error(ErrorKind::InvalidArgument, "n_max must lie in [0,12]");
  if (const auto* kr = std::get_if<KrattenthalerPair<R>>(&pair.kind)) kr->validate(pair.nome.p);

  // Materialize the triangles once; entries are reused across (n, l).
  const auto size = static_cast<std::size_t>(n_max + 1);
  std::vector<std::vector<Complex<R>>> f(size), finv(size);
  for (int n = 0; n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      f[static_cast<std::size_t>(n)].push_back(f_entry(pair, n, k));
      finv[static_cast<std::size_t>(n)].push_back(f_inv_entry(pair, n, k));
    }
  }
  OrthogonalityResult<R> out;
  for (int n = 0; n <= n_max; ++n) {
    for (int l = 0; l <= n; ++l) {
      SumAccumulator<R> acc;
      for (int k = l; k <= n; ++k)
        acc.add(finv[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] *
                f[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)]);
      const Complex<R> target(n == l ? R(1) : R(0));
      const R residual = std::abs(acc.value() - target) / acc.max_abs();
      if (!(residual <= out.residual)) out = {residual, n, l};
    }
  }
  return out;
}

template <std::floating_point R>
R check_orthogonality(const InversePair<R>& pair, int n_max) {
  return orthogonality_residual(pair, n_max).residual;
}

template <std::floating_point R>
using Sequence = std::function<Complex<R>(int)>;

/// sum_{k<=n} f_{n,k} a_k with its accumulator, for conditioning checks.
template <std::floating_point R>
SumAccumulator<R> pair_sum(const InversePair<R>& pair, const Sequence<R>& a_seq, int n) {
  SumAccumulator<R> acc;
  for (int k = 0; k <= n; ++k) acc.add(f_entry(pair, n, k) * a_seq(k));
  return acc;
}

template <std::floating_point R>
SumAccumulator<R> inverse_sum(const InversePair<R>& pair, const Sequence<R>& b_seq, int n) {
  SumAccumulator<R> acc;
  for (int k = 0; k <= n; ++k) acc.add(f_inv_entry(pair, n, k) * b_seq(k));
  return acc;
}

/// b_n = sum_{k<=n} f_{n,k} a_k.
template <std::floating_point R>
Complex<R> apply_pair(const InversePair<R>& pair, const Sequence<R>& a_seq, int n) {
  return pair_sum(pair, a_seq, n).value();
}

/// a_n = sum_{k<=n} f^{-1}_{n,k} b_k.
template <std::floating_point R>
Complex<R> apply_inverse(const InversePair<R>& pair, const Sequence<R>& b_seq, int n) {
  return inverse_sum(pair, b_seq, n).value();
}

/// Sequences (a_n, b_n) related through a pair: either b = f a or a = f^{-1} b.
template <std::floating_point R>
struct SequencePair {
  Sequence<R> a;
  Sequence<R> b;
  /// Condition number of the series behind a_n, when a_n is a sum.
  std::function<R(int)> a_condition = [](int) { return R(1); };
};

/// With the r = 2 stretched pair, f maps this a_n (a 10-omega-9 in base q^2)
/// to the closed product b_n. Parameters a, b, c, d free.
template <std::floating_point R>
SequencePair<R> quadratic_proof_sequences(Complex<R> a, Complex<R> b, Complex<R> c, Complex<R> d, Nome<R> nome) {
  const Complex<R> q = nome.q;
  const Nome<R> q2 = nome.power_base(2);
  auto spec = [=](int n) {
    return OmegaSpec<R>{a * d, {a * d / c, c, d * q, d * q2.q, a * q / b, a * b * ipow(q, 2 * n)}, q2, n};
  };
  SequencePair<R> out;
  out.a = [=](int n) {
    const auto pre = detail::poch_ratio({b / d, b * d * q}, {a * d * q2.q, a * q / d}, q2, n);
    return (pre * eval_omega(spec(n))).value();
  };
  out.a_condition = [=](int n) { return sum_omega(spec(n)).condition(); };
  out.b = [=](int n) {
    const Complex<R> q = nome.q;
    const Nome<R> q2 = nome.power_base(2);
    return (detail::poch_ratio({q2.q, a * b * q2.q, a * q / b}, {c * q2.q, a * d * q2.q / c, a * q / d}, q2, n) *
            detail::poch_ratio({a / c, c / d, d * q}, {a, Complex<R>(1) / b, b * q}, nome, n))
        .value();
  };
  return out;
}

/// Cubic analogue for the r = 3 stretched pair. Parameters a, b, c free.
template <std::floating_point R>
SequencePair<R> cubic_proof_sequences(Complex<R> a, Complex<R> b, Complex<R> c, Nome<R> nome) {
  const Complex<R> q = nome.q;
  const Nome<R> q3 = nome.power_base(3);
  const Complex<R> q3v = q3.q;
  auto spec = [=](int n) {
    return OmegaSpec<R>{a * a / b, {a * c / b, a / c, a * q / b, a * q * q / b, a * q3v / b, a * b * ipow(q, 3 * n)}, q3, n};
  };
  SequencePair<R> out;
  out.a = [=](int n) {
    const auto pre = detail::poch_ratio({b * b / a}, {a * a * q3v / b}, q3, n);
    return (pre * eval_omega(spec(n))).value();
  };
  out.a_condition = [=](int n) { return sum_omega(spec(n)).condition(); };
  out.b = [=](int n) {
    const Complex<R> q = nome.q;
    const Nome<R> q3 = nome.power_base(3);
    const Complex<R> q3v = q3.q;
    return (detail::poch_ratio({q3v, a * b * q3v}, {a * c * q3v / b, a * q3v / c}, q3, n) *
            detail::poch_ratio({b / c, c}, {a, Complex<R>(1) / b}, nome, n) *
            detail::poch_ratio({a * q / b}, {b * q}, nome, 2 * n))
        .value();
  };
  return out;
}

/// Sequences for which f^{-1} b = a holds with the stretched pair (the dual
/// form behind the very-well-poised r-stretched summation).
template <std::floating_point R>
SequencePair<R> stretched_dual_sequences(Complex<R> a, Complex<R> b, Complex<R> c, int r, Nome<R> nome) {
  SequencePair<R> out;
  out.a = [=](int n) {
    const Nome<R> qr = nome.power_base(r);
    return (detail::poch_ratio({b * nome.q}, {a}, nome, r * n) *
            detail::poch_ratio({c, a * b / c}, {a * b * qr.q / c, c * qr.q}, qr, n))
        .value();
  };
  out.b = [=](int n) {
    const Nome<R> qr = nome.power_base(r);
    return (detail::poch_ratio({a / c, c / b}, {a, Complex<R>(1) / b}, nome, n) *
            detail::poch_ratio({qr.q, a * b * qr.q}, {c * qr.q, a * b * qr.q / c}, qr, n))
        .value();
  };
  return out;
}

/// The four-E addition formula; returns (left side, right side).
template <std::floating_point R>
std::pair<Complex<R>, Complex<R>> addition_formula_sides(Complex<R> u, Complex<R> v, Complex<R> x, Complex<R> y,
                                                         Complex<R> p) {
  auto E = [&](Complex<R> z) { return eval_E(z, p); };
  const Complex<R> lhs = E(u * x) * E(u / x) * E(v * y) * E(v / y) - E(u * y) * E(u / y) * E(v * x) * E(v / x);
  const Complex<R> rhs = v / x * E(x * y) * E(x / y) * E(u * v) * E(u / v);
  return {lhs, rhs};
}

/// Telescoped addition formula over j = 0..n (all four spans of length n+1).
template <std::floating_point R>
std::pair<Complex<R>, Complex<R>> macdonald_lemma_sides(std::span<const Complex<R>> a, std::span<const Complex<R>> b,
                                                        std::span<const Complex<R>> c, std::span<const Complex<R>> d,
                                                        Complex<R> p) {
  const std::size_t size = a.size();
  if (size == 0 || b.size() != size || c.size() != size || d.size() != size)
    throw Error(ErrorKind::InvalidArgument, "Macdonald lemma needs four sequences of equal nonzero length");
  auto E = [&](Complex<R> z) { return eval_E(z, p); };
  auto f = [&](std::size_t j) { return E(a[j] * b[j]) * E(a[j] / b[j]) * E(c[j] * d[j]) * E(c[j] / d[j]); };
  auto g = [&](std::size_t j) { return E(a[j] * c[j]) * E(a[j] / c[j]) * E(b[j] * d[j]) * E(b[j] / d[j]); };
  auto h = [&](std::size_t j) { return E(a[j] * d[j]) * E(a[j] / d[j]) * E(b[j] * c[j]) * E(b[j] / c[j]); };

  SumAccumulator<R> acc;
  for (std::size_t k = 0; k < size; ++k) {
    Complex<R> term = b[k] / c[k] * f(k);
    for (std::size_t j = 0; j < k; ++j) term *= g(j);
    for (std::size_t j = k + 1; j < size; ++j) term *= h(j);
    acc.add(term);
  }
  Complex<R> all_g(1), all_h(1);
  for (std::size_t j = 0; j < size; ++j) {
    all_g *= g(j);
    all_h *= h(j);
  }
  return {acc.value(), all_g - all_h};
}

/// Terms of the two-base summation with d = r^n (k = 0..n). At c = 1 the
/// closed form vanishes, which is the orthogonality of the raw r-pair.
template <std::floating_point R>
std::vector<Complex<R>> two_base_sum_terms(Complex<R> a, Complex<R> b, Complex<R> c, Complex<R> r, const Nome<R>& nome,
                                           int n) {
  const Complex<R> q = nome.q, p = nome.p;
  const Nome<R> rbase = nome.with_base(r);
  const Complex<R> rn = ipow(r, n);
  const Complex<R> base = eval_E_denominator(a, p) * eval_E_denominator(b, p);
  std::vector<Complex<R>> terms;
  for (int k = 0; k <= n; ++k) {
    const Complex<R> qk = ipow(q, k), rk = ipow(r, k);
    Complex<R> t = eval_E(a * qk * rk, p) * eval_E(b * rk / qk, p) / base;
    t *= pochhammer_e(a / c, nome, k) * pochhammer_e(c / b, nome, k);
    t *= pochhammer_e(a * b * rn, rbase, k) * pochhammer_e(Complex<R>(1) / rn, rbase, k) * qk;
    t /= pochhammer_e_denominator(c * r, rbase, k) * pochhammer_e_denominator(a * b * r / c, rbase, k);
    t /= pochhammer_e_denominator(q / (rn * b), nome, k) * pochhammer_e_denominator(a * q * rn, nome, k);
    terms.push_back(t);
  }
  return terms;
}

/// Parameter transform taking the c = 1 two-base sum to the (n, l) entry of
/// f^{-1} f: n -> n - l, k -> k - l, a -> a q^l r^l, b -> b q^{-l} r^l.
template <std::floating_point R>
struct OrthogonalityShift {
  int l = 0;

  std::pair<Complex<R>, Complex<R>> operator()(Complex<R> a, Complex<R> b, Complex<R> q, Complex<R> r) const {
    return {a * ipow(q, l) * ipow(r, l), b * ipow(r, l) / ipow(q, l)};
  }
  int length(int n) const { return n - l; }
};

}  // namespace ellhyp
