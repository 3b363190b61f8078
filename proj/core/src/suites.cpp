// Property suites for the kernel, inversion, determinant and multivariable
// modules. Every check is templated on the working real type.

#include <cmath>
#include <limits>
#include <numbers>

#include "ellhyp/determinants.hpp"
#include "ellhyp/inversion.hpp"
#include "ellhyp/kernel.hpp"
#include "ellhyp/multivar.hpp"
#include "ellhyp/series.hpp"
#include "ellhyp/verification.hpp"
#include "runner.hpp"

namespace ellhyp {
namespace {

using detail::Check;
using detail::TrialOutcome;
using detail::dump;

/// Sums with sum|t|/|sum t| above this are redrawn.
inline constexpr double kMaxSeriesCondition = 1e6;
// Checks that compare two evaluations of one series to near machine
// precision need well-conditioned points.
inline constexpr double kTightSeriesCondition = 1e2;

template <class T>
struct Type {
  using type = T;
};

template <std::floating_point W, std::floating_point R>
Complex<W> widen(Complex<R> z) {
  return Complex<W>(z);
}

template <std::floating_point W, std::floating_point R>
Nome<W> widen(const Nome<R>& nome) {
  return {Complex<W>(nome.q), Complex<W>(nome.p)};
}

template <std::floating_point T>
std::pair<Complex<T>, Complex<T>> both_sides(const DetSides<T>& s) {
  return {s.det, s.product};
}

template <std::floating_point T>
std::pair<Complex<T>, Complex<T>> both_sides(const std::pair<Complex<T>, Complex<T>>& s) {
  return s;
}

/// True when `f` evaluated in R and in long double disagrees by more than
/// `limit` (default kMaxSeriesCondition * eps): the point sits next to a
/// zero of E or the sides cancel, which no sum or pivot condition reveals.
/// `f` takes a Type<T> tag and returns a DetSides<T> or a pair of sides.
template <std::floating_point R, class F>
bool unstable(F&& f, double limit = kMaxSeriesCondition * std::numeric_limits<R>::epsilon()) {
  if constexpr (std::is_same_v<R, long double>) {
    return false;
  } else {
    const auto [lo_l, lo_r] = both_sides(f(Type<R>{}));
    const auto [hi_l, hi_r] = both_sides(f(Type<long double>{}));
    return !(relative_error(widen<long double>(lo_l), hi_l) <= limit &&
             relative_error(widen<long double>(lo_r), hi_r) <= limit);
  }
}

/// Bounded draws in the configured region.
template <std::floating_point R>
struct Draw {
  Rng& rng;
  const SamplingRegion& region;

  Complex<R> param() { return Complex<R>(rng.polar(region.param_min, region.param_max)); }
  Complex<R> q() { return Complex<R>(rng.polar(region.q_min, region.q_max)); }
  Complex<R> p() { return Complex<R>(rng.polar(region.p_min, region.p_max)); }
  Nome<R> nome() {
    const Complex<R> qq = q();
    return {qq, p()};
  }
};

template <std::floating_point R>
R rel(Complex<R> a, Complex<R> b) {
  return relative_error(a, b);
}

template <std::floating_point R>
ParamPoint point_of(const Nome<R>& nome, int n = 0) {
  ParamPoint pt;
  pt.nome = {Complex<double>(nome.q), Complex<double>(nome.p)};
  pt.integers["n"] = n;
  return pt;
}

// ---------------------------------------------------------------- kernel

template <std::floating_point R>
std::vector<Check> kernel_checks(const SuiteOptions& opt) {
  const auto& region = opt.region;
  std::vector<Check> out;
  out.push_back({"reflection", 1e-10, [&region](Rng& rng) -> std::optional<TrialOutcome> {
                   Draw<R> draw{rng, region};
                   const Complex<R> x = draw.param(), p = draw.p();
                   const Complex<R> e = eval_E(x, p);
                   const R err = std::max(rel(e, -x * eval_E(Complex<R>(1) / x, p)), rel(e, eval_E(p / x, p)));
                   auto pt = point_of(Nome<R>{Complex<R>(1), p});
                   dump(pt, "x", x);
                   return TrialOutcome{double(err), pt};
                 }});
  out.push_back({"quasi_periodicity", 1e-10, [&region](Rng& rng) -> std::optional<TrialOutcome> {
                   Draw<R> draw{rng, region};
                   const Complex<R> x = draw.param(), p = draw.p();
                   const Complex<R> e = eval_E(x, p);
                   R err(0);
                   for (int k : {-2, -1, 1, 2}) {
                     const Complex<R> factor = ipow(-x, k) * ipow(p, k * (k - 1) / 2);
                     err = std::max(err, rel(e, factor * eval_E(x * ipow(p, k), p)));
                   }
                   auto pt = point_of(Nome<R>{Complex<R>(1), p});
                   dump(pt, "x", x);
                   return TrialOutcome{double(err), pt};
                 }});
  out.push_back({"pochhammer_periodicity", 1e-10, [&region](Rng& rng) -> std::optional<TrialOutcome> {
                   Draw<R> draw{rng, region};
                   const Complex<R> a = draw.param();
                   const Nome<R> nome = draw.nome();
                   R err(0);
                   for (int n = 0; n <= 4; ++n)
                     for (int k : {1, 2}) {
                       const Complex<R> factor = ipow(-a, n * k) * ipow(nome.p, n * k * (k - 1) / 2) *
                                                 ipow(nome.q, k * n * (n - 1) / 2);
                       err = std::max(err, rel(pochhammer_e(a, nome, n),
                                               factor * pochhammer_e(a * ipow(nome.p, k), nome, n)));
                     }
                   auto pt = point_of(nome);
                   dump(pt, "a", a);
                   return TrialOutcome{double(err), pt};
                 }});
  // The five shifted-factorial relations, each as two independent kernel calls.
  using Relation = std::function<std::pair<Complex<R>, Complex<R>>(Complex<R>, const Nome<R>&, int, int)>;
  auto relation = [&out, &region](const std::string& name, Relation sides_of) {
    out.push_back({name, 1e-10, [&region, sides_of](Rng& rng) -> std::optional<TrialOutcome> {
                     Draw<R> draw{rng, region};
                     const Complex<R> a = draw.param();
                     const Nome<R> nome = draw.nome();
                     const int n = rng.uniform_int(0, 5), k = rng.uniform_int(0, 5);
                     const auto [lhs, rhs] = sides_of(a, nome, n, k);
                     auto pt = point_of(nome, n);
                     pt.integers["k"] = k;
                     dump(pt, "a", a);
                     return TrialOutcome{double(rel(lhs, rhs)), pt};
                   }});
  };
  relation("relation_negative_shift", [](Complex<R> a, const Nome<R>& nome, int n, int) {
    const Complex<R> q = nome.q;
    return std::pair{pochhammer_e(a * ipow(q, -n), nome, n),
                     pochhammer_e(q / a, nome, n) * ipow(-a / q, n) * ipow(q, -(n * (n - 1) / 2))};
  });
  relation("relation_negative_shift_k", [](Complex<R> a, const Nome<R>& nome, int n, int k) {
    const Complex<R> q = nome.q;
    return std::pair{pochhammer_e(a * ipow(q, -n), nome, k),
                     pochhammer_e(q / a, nome, n) * pochhammer_e(a, nome, k) * ipow(q, -n * k) /
                         pochhammer_e(ipow(q, 1 - k) / a, nome, n)};
  });
  relation("relation_positive_shift", [](Complex<R> a, const Nome<R>& nome, int n, int k) {
    const Complex<R> lhs = pochhammer_e(a * ipow(nome.q, n), nome, k);
    const Complex<R> swapped = pochhammer_e(a * ipow(nome.q, k), nome, n) * pochhammer_e(a, nome, k) / pochhammer_e(a, nome, n);
    const Complex<R> joined = pochhammer_e(a, nome, n + k) / pochhammer_e(a, nome, n);
    // Report the worse of the two right sides.
    return relative_error(lhs, swapped) > relative_error(lhs, joined) ? std::pair{lhs, swapped} : std::pair{lhs, joined};
  });
  relation("relation_reversal", [](Complex<R> a, const Nome<R>& nome, int n, int k) {
    k = std::min(k, n);
    const Complex<R> b = ipow(nome.q, 1 - n) / a;
    return std::pair{pochhammer_e(a, nome, n - k),
                     pochhammer_e(a, nome, n) * ipow(-b, k) * ipow(nome.q, k * (k - 1) / 2) / pochhammer_e(b, nome, k)};
  });
  relation("relation_stretch", [](Complex<R> a, const Nome<R>& nome, int n, int k) {
    const int m = 1 + k % 4;
    Complex<R> split(1);
    for (int j = 0; j < m; ++j) split *= pochhammer_e(a * ipow(nome.q, j), nome.power_base(m), n);
    return std::pair{pochhammer_e(a, nome, m * n), split};
  });
  out.push_back({"nome_doubling", 1e-10, [&region](Rng& rng) -> std::optional<TrialOutcome> {
                   Draw<R> draw{rng, region};
                   const Complex<R> x = draw.param();
                   const Nome<R> nome = draw.nome();
                   const Complex<R> p = nome.p;
                   R err = rel(eval_E(x, p) * eval_E(-x, p), eval_E(x * x, p * p));
                   // E(a q^{2k};p)/E(a;p) as a ratio of shifted factorials with nome p^{1/2}.
                   const Complex<R> root = std::sqrt(x), half = std::sqrt(p);
                   const Nome<R> halved{nome.q, half};
                   for (int k = 0; k <= 4; ++k) {
                     const Complex<R> ratio = eval_E(x * ipow(nome.q, 2 * k), p) / eval_E(x, p);
                     const Complex<R> alt = pochhammer_e(nome.q * root, halved, k) * pochhammer_e(-nome.q * root, halved, k) /
                                            (pochhammer_e(root, halved, k) * pochhammer_e(-root, halved, k));
                     err = std::max(err, rel(ratio, alt));
                   }
                   auto pt = point_of(nome);
                   dump(pt, "x", x);
                   return TrialOutcome{double(err), pt};
                 }});
  out.push_back({"theta_product_vs_series", 1e-10, [](Rng& rng) -> std::optional<TrialOutcome> {
                   const Complex<R> p(rng.polar(0.05, 0.5));
                   const Complex<R> z(R(rng.uniform(-std::numbers::pi, std::numbers::pi)), R(rng.uniform(-0.5, 0.5)));
                   const Complex<R> quarter = std::pow(p, Complex<R>(R(0.25)));
                   SumAccumulator<R> series;
                   for (int n = 0; n <= 30; ++n) {
                     const int m = 2 * n + 1;
                     series.add(R(n % 2 ? -2 : 2) * ipow(quarter, m * m) * std::sin(R(m) * z));
                   }
                   const R err = rel(theta1(z, p), series.value());
                   auto pt = point_of(Nome<R>{Complex<R>(1), p});
                   dump(pt, "z", z);
                   return TrialOutcome{double(err), pt};
                 }});
  out.push_back({"classical_limit", 1e-13, [&region](Rng& rng) -> std::optional<TrialOutcome> {
                   Draw<R> draw{rng, region};
                   const Complex<R> a = draw.param(), q = draw.q();
                   const Nome<R> nome{q, Complex<R>(0)};
                   R err(0);
                   for (int n = -3; n <= 4; ++n) {
                     Complex<R> classical(1);
                     if (n >= 0)
                       for (int k = 0; k < n; ++k) classical *= Complex<R>(1) - a * ipow(q, k);
                     else
                       for (int k = n; k < 0; ++k) classical /= Complex<R>(1) - a * ipow(q, k);
                     err = std::max(err, rel(pochhammer_e(a, nome, n), classical));
                   }
                   auto pt = point_of(nome);
                   dump(pt, "a", a);
                   return TrialOutcome{double(err), pt};
                 }});
  return out;
}

// ------------------------------------------------------------- inversion

template <std::floating_point R>
Check orthogonality_check(const std::string& name, const SuiteOptions& opt,
                          std::function<InversePair<R>(Draw<R>&)> make) {
  const auto& region = opt.region;
  return {name, 1e-8, [&region, make](Rng& rng) -> std::optional<TrialOutcome> {
            Draw<R> draw{rng, region};
            const InversePair<R> pair = make(draw);
            const auto res = orthogonality_residual(pair, 8);
            auto pt = point_of(pair.nome);
            pt.integers["worst_n"] = res.worst_n;
            pt.integers["worst_l"] = res.worst_l;
            return TrialOutcome{double(res.residual), pt};
          }};
}

template <std::floating_point R>
Check replay_check(const std::string& name, const SuiteOptions& opt, int r) {
  const auto& region = opt.region;
  return {name, 1e-8, [&region, r](Rng& rng) -> std::optional<TrialOutcome> {
            Draw<R> draw{rng, region};
            const Nome<R> nome = draw.nome();
            const Complex<R> a = draw.param(), b = draw.param(), c = draw.param(), d = draw.param();
            const auto seq = r == 2 ? quadratic_proof_sequences(a, b, c, d, nome) : cubic_proof_sequences(a, b, c, nome);
            using W = long double;
            const Nome<W> wide_nome{Complex<W>(nome.q), Complex<W>(nome.p)};
            const auto wide = r == 2 ? quadratic_proof_sequences<W>(Complex<W>(a), Complex<W>(b), Complex<W>(c), Complex<W>(d), wide_nome)
                                     : cubic_proof_sequences<W>(Complex<W>(a), Complex<W>(b), Complex<W>(c), wide_nome);
            const InversePair<R> pair{RStepPair<R>{a, b, r}, nome};
            const InversePair<W> wide_pair{RStepPair<W>{Complex<W>(a), Complex<W>(b), r}, wide_nome};
            // Both sides are compared against long double to catch points next
            // to a zero of E, where neither a sum condition nor a product shows it.
            const W limit = kMaxSeriesCondition * std::numeric_limits<R>::epsilon();
            R err(0);
            for (int n = 0; n <= 5; ++n) {
              const Complex<R> closed = seq.b(n);
              if (!is_finite(closed)) return std::nullopt;
              if (seq.a_condition(n) > kMaxSeriesCondition) return std::nullopt;
              const auto sum = pair_sum(pair, seq.a, n);
              if (sum.condition() > kMaxSeriesCondition) return std::nullopt;
              if (relative_error(Complex<W>(closed), wide.b(n)) > limit) return std::nullopt;
              if (relative_error(Complex<W>(sum.value()), pair_sum(wide_pair, wide.a, n).value()) > limit)
                return std::nullopt;
              err = std::max(err, rel(sum.value(), closed));
            }
            auto pt = point_of(nome);
            dump(pt, "a", a);
            dump(pt, "b", b);
            dump(pt, "c", c);
            if (r == 2) dump(pt, "d", d);
            return TrialOutcome{double(err), pt};
          }};
}

template <std::floating_point R>
std::vector<Check> inversion_checks(const SuiteOptions& opt) {
  const auto& region = opt.region;
  std::vector<Check> out;
  for (int r = 1; r <= 4; ++r)
    out.push_back(orthogonality_check<R>("orthogonality_rstep_r" + std::to_string(r), opt, [r](Draw<R>& d) {
      const Nome<R> nome = d.nome();
      const Complex<R> a = d.param(), b = d.param();
      return InversePair<R>{RStepPair<R>{a, b, r}, nome};
    }));
  out.push_back(orthogonality_check<R>("orthogonality_two_base", opt, [](Draw<R>& d) {
    const Nome<R> nome = d.nome();
    const Complex<R> a = d.param(), b = d.param();
    const Complex<R> r(d.rng.polar(d.region.r_min, d.region.r_max));
    return InversePair<R>{RawRPair<R>{a, b, r}, nome};
  }));
  out.push_back(orthogonality_check<R>("orthogonality_krattenthaler", opt, [](Draw<R>& d) {
    const Nome<R> nome = d.nome();
    KrattenthalerPair<R> kr{d.param(), {}, {}};
    for (int i = 0; i <= 8; ++i) {
      kr.b_seq.push_back(d.param());
      kr.c_seq.push_back(d.param());
    }
    return InversePair<R>{kr, nome};
  }));
  out.push_back(replay_check<R>("replay_quadratic", opt, 2));
  out.push_back(replay_check<R>("replay_cubic", opt, 3));
  out.push_back({"replay_stretched_dual", 1e-8, [&region](Rng& rng) -> std::optional<TrialOutcome> {
                   Draw<R> draw{rng, region};
                   const Nome<R> nome = draw.nome();
                   const Complex<R> a = draw.param(), b = draw.param(), c = draw.param();
                   const int r = rng.uniform_int(1, 3);
                   const auto seq = stretched_dual_sequences(a, b, c, r, nome);
                   const InversePair<R> pair{RStepPair<R>{a, b, r}, nome};
                   R err(0);
                   for (int n = 0; n <= 4; ++n) {
                     const auto sum = inverse_sum(pair, seq.b, n);
                     if (sum.condition() > kMaxSeriesCondition) return std::nullopt;
                     err = std::max(err, rel(sum.value(), seq.a(n)));
                   }
                   auto pt = point_of(nome);
                   pt.integers["r"] = r;
                   dump(pt, "a", a);
                   dump(pt, "b", b);
                   dump(pt, "c", c);
                   return TrialOutcome{double(err), pt};
                 }});
  out.push_back({"addition_formula", 1e-10, [&region](Rng& rng) -> std::optional<TrialOutcome> {
                   Draw<R> draw{rng, region};
                   const Complex<R> u = draw.param(), v = draw.param(), x = draw.param(), y = draw.param(), p = draw.p();
                   auto eval = [&](auto t) {
                     using T = typename decltype(t)::type;
                     return addition_formula_sides(widen<T>(u), widen<T>(v), widen<T>(x), widen<T>(y), widen<T>(p));
                   };
                   // The left side is a difference of two products; cancellation
                   // must stay well inside the tolerance.
                   if (unstable<R>(eval, 1e-11)) return std::nullopt;
                   const auto [lhs, rhs] = eval(Type<R>{});
                   auto pt = point_of(Nome<R>{Complex<R>(1), p});
                   dump(pt, "u", u);
                   dump(pt, "v", v);
                   dump(pt, "x", x);
                   dump(pt, "y", y);
                   return TrialOutcome{double(rel(lhs, rhs)), pt};
                 }});
  out.push_back({"macdonald_lemma", 1e-10, [&region](Rng& rng) -> std::optional<TrialOutcome> {
                   Draw<R> draw{rng, region};
                   const Complex<R> p = draw.p();
                   const int n = rng.uniform_int(0, 6);
                   std::vector<Complex<R>> a, b, c, d;
                   for (int j = 0; j <= n; ++j) {
                     a.push_back(draw.param());
                     b.push_back(draw.param());
                     c.push_back(draw.param());
                     d.push_back(draw.param());
                   }
                   auto eval = [&](auto t) {
                     using T = typename decltype(t)::type;
                     auto wide = [](const std::vector<Complex<R>>& v) {
                       std::vector<Complex<T>> out;
                       for (const auto& z : v) out.push_back(widen<T>(z));
                       return out;
                     };
                     return macdonald_lemma_sides<T>(wide(a), wide(b), wide(c), wide(d), widen<T>(p));
                   };
                   // The right side is a difference of two products.
                   if (unstable<R>(eval, 1e-11)) return std::nullopt;
                   const auto [lhs, rhs] = eval(Type<R>{});
                   auto pt = point_of(Nome<R>{Complex<R>(1), p}, n);
                   return TrialOutcome{double(rel(lhs, rhs)), pt};
                 }});
  out.push_back({"orthogonality_from_two_base_sum", 1e-9, [&region](Rng& rng) -> std::optional<TrialOutcome> {
                   Draw<R> draw{rng, region};
                   const Nome<R> nome = draw.nome();
                   const Complex<R> a = draw.param(), b = draw.param();
                   const Complex<R> r(rng.polar(region.r_min, region.r_max));
                   const int n = rng.uniform_int(1, 6), l = rng.uniform_int(0, n - 1);
                   const OrthogonalityShift<R> shift{l};
                   const auto [as, bs] = shift(a, b, nome.q, r);
                   const auto terms = two_base_sum_terms(as, bs, Complex<R>(1), r, nome, shift.length(n));
                   const InversePair<R> pair{RawRPair<R>{a, b, r}, nome};
                   SumAccumulator<R> acc;
                   for (const auto& t : terms) acc.add(t);
                   // The shifted sum vanishes and its terms are proportional to f^{-1}_{n,k} f_{k,l}.
                   R err = std::abs(acc.value()) / acc.max_abs();
                   const Complex<R> ratio0 = terms[0] / (f_inv_entry(pair, n, l) * f_entry(pair, l, l));
                   for (int k = l; k <= n; ++k) {
                     const Complex<R> ratio = terms[static_cast<std::size_t>(k - l)] / (f_inv_entry(pair, n, k) * f_entry(pair, k, l));
                     err = std::max(err, rel(ratio, ratio0));
                   }
                   auto pt = point_of(nome, n);
                   pt.integers["l"] = l;
                   dump(pt, "a", a);
                   dump(pt, "b", b);
                   dump(pt, "r", r);
                   return TrialOutcome{double(err), pt};
                 }});
  out.push_back({"krattenthaler_substitution", 1e-9, [&region](Rng& rng) -> std::optional<TrialOutcome> {
                   Draw<R> draw{rng, region};
                   const Nome<R> nome = draw.nome();
                   const Complex<R> a = draw.param(), b = draw.param();
                   const int r = rng.uniform_int(1, 3);
                   KrattenthalerPair<R> kr{a * b, {}, {}};
                   for (int i = 0; i <= 5; ++i) {
                     kr.b_seq.push_back(a * ipow(nome.q, i));
                     kr.c_seq.push_back(ipow(nome.q, r * i));
                   }
                   const InversePair<R> step{RStepPair<R>{a, b, r}, nome}, sub{kr, nome};
                   // The substitution matches the stretched pair up to a diagonal
                   // rescaling f_{n,k} -> u_n f_{n,k} / u_k, which cancels here.
                   auto ratio = [&](int n, int k) { return f_entry(step, n, k) / f_entry(sub, n, k); };
                   R err(0);
                   for (int n = 0; n <= 5; ++n)
                     for (int j = 0; j <= n; ++j)
                       for (int k = 0; k <= j; ++k)
                         err = std::max(err, rel(ratio(n, k) * ratio(j, j), ratio(n, j) * ratio(j, k)));
                   auto pt = point_of(nome);
                   pt.integers["r"] = r;
                   dump(pt, "a", a);
                   dump(pt, "b", b);
                   return TrialOutcome{double(err), pt};
                 }});
  return out;
}

// ---------------------------------------------------------- determinants

inline constexpr double kMaxDetCondition = 1e8;

template <std::floating_point R>
std::vector<Check> determinant_checks(const SuiteOptions& opt) {
  const auto& region = opt.region;
  std::vector<Check> out;
  out.push_back({"andrews_stanton", 1e-8, [&region](Rng& rng) -> std::optional<TrialOutcome> {
                   Draw<R> draw{rng, region};
                   const Nome<R> nome = draw.nome();
                   const Complex<R> x = draw.param(), y = draw.param();
                   R err(0);
                   for (int n = 1; n <= 5; ++n) {
                     const auto sides = andrews_stanton_sides(x, y, nome, n);
                     if (sides.condition > kMaxDetCondition) return std::nullopt;
                     if (unstable<R>([&](auto t) {
                           using T = typename decltype(t)::type;
                           return andrews_stanton_sides(widen<T>(x), widen<T>(y), widen<T>(nome), n);
                         }))
                       return std::nullopt;
                     err = std::max(err, sides.ratio_error());
                   }
                   auto pt = point_of(nome, 5);
                   dump(pt, "x", x);
                   dump(pt, "y", y);
                   return TrialOutcome{double(err), pt};
                 }});
  out.push_back({"andrews_stanton_lu", 1e-9, [&region](Rng& rng) -> std::optional<TrialOutcome> {
                   Draw<R> draw{rng, region};
                   const Nome<R> nome = draw.nome();
                   const Complex<R> x = draw.param(), y = draw.param();
                   R err(0);
                   for (int n = 1; n <= 5; ++n) {
                     const Matrix<R> M = andrews_stanton_matrix(x, y, nome, n);
                     const auto det = det_numeric(M);
                     if (det.condition > kMaxDetCondition) return std::nullopt;
                     if (unstable<R>([&](auto t) {
                           using T = typename decltype(t)::type;
                           return andrews_stanton_sides(widen<T>(x), widen<T>(y), widen<T>(nome), n);
                         }))
                       return std::nullopt;
                     const auto lu = andrews_stanton_lu(x, y, nome, n);
                     const auto [upper, diag] = lu_replay_residuals(M, lu);
                     Complex<R> prod(1);
                     for (const auto& l : lu.L_diag) prod *= l;
                     err = std::max({err, upper, diag, rel(prod, det.value)});
                     for (int i = 0; i < n; ++i) err = std::max(err, std::abs(lu.U(i, i) - Complex<R>(1)));
                   }
                   auto pt = point_of(nome, 5);
                   dump(pt, "x", x);
                   dump(pt, "y", y);
                   return TrialOutcome{double(err), pt};
                 }});
  out.push_back({"corollary_determinant", 1e-8, [&region](Rng& rng) -> std::optional<TrialOutcome> {
                   Draw<R> draw{rng, region};
                   const Nome<R> nome = draw.nome();
                   const Complex<R> A = draw.param(), B = draw.param(), C = draw.param();
                   std::vector<Complex<R>> X;
                   for (int i = 0; i < 5; ++i) X.push_back(draw.param());
                   R err(0);
                   for (int n = 1; n <= 5; ++n) {
                     auto eval = [&](auto t) {
                       using T = typename decltype(t)::type;
                       std::vector<Complex<T>> Xn;
                       for (int i = 0; i < n; ++i) Xn.push_back(widen<T>(X[static_cast<std::size_t>(i)]));
                       return corollary_determ_sides<T>(Xn, widen<T>(A), widen<T>(B), widen<T>(C), widen<T>(nome));
                     };
                     const auto sides = eval(Type<R>{});
                     if (sides.condition > kMaxDetCondition || unstable<R>(eval)) return std::nullopt;
                     err = std::max(err, sides.ratio_error());
                   }
                   auto pt = point_of(nome, 5);
                   dump(pt, "A", A);
                   dump(pt, "B", B);
                   dump(pt, "C", C);
                   return TrialOutcome{double(err), pt};
                 }});
  // geometric: A_i = A q^{n-i}, the specialization used for the closed forms.
  for (const bool geometric : {false, true}) {
    const std::string name = geometric ? "elliptic_determinant_lemma_geometric" : "elliptic_determinant_lemma";
    out.push_back({name, 1e-8, [&region, geometric](Rng& rng) -> std::optional<TrialOutcome> {
                     Draw<R> draw{rng, region};
                     const Nome<R> nome = draw.nome();
                     const Complex<R> B = draw.param(), C = draw.param(), A0 = draw.param();
                     R err(0);
                     for (int n = 1; n <= 5; ++n) {
                       EllipticDetProblem<R> pb{{}, {}, B, C, nome};
                       for (int i = 0; i < n; ++i) {
                         pb.X.push_back(draw.param());
                         pb.A.push_back(geometric ? A0 * ipow(nome.q, n - 1 - i) : draw.param());
                       }
                       auto widened = [&pb](auto t) {
                         using T = typename decltype(t)::type;
                         EllipticDetProblem<T> w{{}, {}, widen<T>(pb.B), widen<T>(pb.C), widen<T>(pb.nome)};
                         for (std::size_t i = 0; i < pb.X.size(); ++i) {
                           w.X.push_back(widen<T>(pb.X[i]));
                           w.A.push_back(widen<T>(pb.A[i]));
                         }
                         return w;
                       };
                       auto eval = [&](auto t) { return elliptic_det_lemma_sides(widened(t)); };
                       const auto sides = eval(Type<R>{});
                       if (sides.condition > kMaxDetCondition || unstable<R>(eval)) return std::nullopt;
                       err = std::max(err, sides.ratio_error());
                       // X_i = 1/A_i makes the matrix upper triangular.
                       auto triangular = [&](auto t) {
                         using T = typename decltype(t)::type;
                         auto w = widened(t);
                         for (std::size_t i = 0; i < w.X.size(); ++i) w.X[i] = Complex<T>(1) / w.A[i];
                         const Matrix<T> m = elliptic_det_lemma_matrix(w);
                         Complex<T> diag(1);
                         for (int i = 0; i < n; ++i) diag *= m(i, i);
                         return DetSides<T>{diag, elliptic_det_lemma_product(w), T(1)};
                       };
                       if (unstable<R>(triangular)) return std::nullopt;
                       err = std::max(err, triangular(Type<R>{}).ratio_error());
                     }
                     auto pt = point_of(nome, 5);
                     dump(pt, "B", B);
                     dump(pt, "C", C);
                     if (geometric) dump(pt, "A", A0);
                     return TrialOutcome{double(err), pt};
                   }});
  }
  out.push_back({"p_family_invariants", 1e-10, [&region](Rng& rng) -> std::optional<TrialOutcome> {
                   Draw<R> draw{rng, region};
                   const Nome<R> nome = draw.nome();
                   const PFamily<R> P{draw.param(), draw.param(), nome, 5};
                   const Complex<R> X = draw.param();
                   auto pt = point_of(nome, 5);
                   dump(pt, "X", X);
                   return TrialOutcome{double(p_family_invariant_residual(P, X)), pt};
                 }});
  out.push_back({"row_proportionality", 1e-10, [&region](Rng& rng) -> std::optional<TrialOutcome> {
                   Draw<R> draw{rng, region};
                   const Nome<R> nome = draw.nome();
                   EllipticDetProblem<R> pb{{}, {}, draw.param(), draw.param(), nome};
                   for (int i = 0; i < 3; ++i) {
                     pb.X.push_back(draw.param());
                     pb.A.push_back(draw.param());
                   }
                   const R err = std::max({row_proportionality_residual(pb, 0, 1), row_proportionality_residual(pb, 2, 0),
                                           row_proportionality_residual(pb, 1, 2)});
                   return TrialOutcome{double(err), point_of(nome, 3)};
                 }});
  out.push_back({"theta_determinant", 1e-8, [&region](Rng& rng) -> std::optional<TrialOutcome> {
                   Draw<R> draw{rng, region};
                   const Complex<R> p = draw.p();
                   const int n = rng.uniform_int(2, 4);
                   std::vector<Complex<R>> X;
                   for (int i = 0; i < n; ++i) X.push_back(Complex<R>(R(rng.uniform(-1, 1)), R(rng.uniform(-0.2, 0.2))));
                   const Complex<R> A(R(rng.uniform(-1, 1))), B(R(rng.uniform(-1, 1))), C(R(rng.uniform(-1, 1)));
                   auto eval = [&](auto t) {
                     using T = typename decltype(t)::type;
                     std::vector<Complex<T>> Xw;
                     for (const auto& x : X) Xw.push_back(widen<T>(x));
                     return theta_det_sides<T>(Xw, widen<T>(A), widen<T>(B), widen<T>(C), widen<T>(p));
                   };
                   const auto sides = eval(Type<R>{});
                   if (sides.condition > kMaxDetCondition || unstable<R>(eval)) return std::nullopt;
                   auto pt = point_of(Nome<R>{Complex<R>(1), p}, n);
                   dump(pt, "A", A);
                   dump(pt, "B", B);
                   dump(pt, "C", C);
                   return TrialOutcome{double(sides.ratio_error()), pt};
                 }});
  out.push_back({"theta_determinant_addition_formula", 1e-10, [&region](Rng& rng) -> std::optional<TrialOutcome> {
                   // At n = 2 the theta determinant is the four-term addition formula:
                   // th(A+X1)th(A+C-X1)th(B+X2)th(B+C-X2) - (X1 <-> X2)
                   //   = th(X1-X2)th(C-X1-X2)th(B-A)th(A+B+C).
                   Draw<R> draw{rng, region};
                   const Complex<R> p = draw.p();
                   auto th = [&](Complex<R> z) { return theta1(z, p); };
                   const Complex<R> x1(R(rng.uniform(-1, 1))), x2(R(rng.uniform(-1, 1)));
                   const Complex<R> A(R(rng.uniform(-1, 1))), B(R(rng.uniform(-1, 1))), C(R(rng.uniform(-1, 1)));
                   const Complex<R> lhs = th(A + x1) * th(A + C - x1) * th(B + x2) * th(B + C - x2) -
                                          th(A + x2) * th(A + C - x2) * th(B + x1) * th(B + C - x1);
                   const Complex<R> rhs = th(x1 - x2) * th(C - x1 - x2) * th(B - A) * th(A + B + C);
                   const std::array<Complex<R>, 2> X{x1, x2};
                   const auto sides = theta_det_sides<R>(X, A, B, C, p);
                   const R err = std::max(rel(lhs, rhs), rel(sides.det, lhs));
                   return TrialOutcome{double(err), point_of(Nome<R>{Complex<R>(1), p}, 2)};
                 }});
  return out;
}

// ------------------------------------------------------------ multivariable

template <std::floating_point R>
CnPoint<R> draw_cn(Draw<R>& draw, int n, int N) {
  CnPoint<R> pt;
  pt.n = n;
  pt.N = N;
  pt.nome = draw.nome();
  for (int i = 0; i < n; ++i) pt.x.push_back(draw.param());
  pt.a = draw.param();
  pt.b = draw.param();
  pt.c = draw.param();
  pt.d = draw.param();
  pt.e = draw.param();
  pt.f = draw.param();
  return pt;
}

template <std::floating_point R>
ParamPoint dump_cn(const CnPoint<R>& cn) {
  auto pt = point_of(cn.nome, cn.n);
  pt.integers["N"] = cn.N;
  for (std::size_t i = 0; i < cn.x.size(); ++i) dump(pt, "x" + std::to_string(i + 1), cn.x[i]);
  dump(pt, "a", cn.a);
  dump(pt, "b", cn.b);
  dump(pt, "c", cn.c);
  dump(pt, "d", cn.d);
  dump(pt, "e", cn.e);
  return pt;
}

template <std::floating_point R>
std::vector<Check> cn_checks(const SuiteOptions& opt) {
  const auto& region = opt.region;
  std::vector<Check> out;
  const std::vector<std::pair<int, int>> sizes{{1, 0}, {1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 0},
                                               {2, 1}, {2, 2}, {2, 3}, {3, 0}, {3, 1}, {3, 2}};
  for (const auto& [n, N] : sizes) {
    out.push_back({"cn_jackson_n" + std::to_string(n) + "_N" + std::to_string(N), 1e-8,
                   [&region, n, N](Rng& rng) -> std::optional<TrialOutcome> {
                     Draw<R> draw{rng, region};
                     auto pt = draw_cn(draw, n, N);
                     pt.e = cn_jackson_e(pt);
                     const auto sides = cn_jackson_sides(pt);
                     if (sides.condition > kMaxSeriesCondition) return std::nullopt;
                     return TrialOutcome{double(sides.rel_error()), dump_cn(pt)};
                   }});
  }
  out.push_back({"cn_jackson_one_variable_is_jackson_sum", 1e-10, [&region](Rng& rng) -> std::optional<TrialOutcome> {
                   Draw<R> draw{rng, region};
                   const int N = rng.uniform_int(0, 4);
                   auto pt = draw_cn(draw, 1, N);
                   pt.e = cn_jackson_e(pt);
                   const auto sides = cn_jackson_sides(pt);
                   if (sides.condition > kTightSeriesCondition) return std::nullopt;
                   // With n = 1 the sum is the 8omega7 in a x_1 ... with a -> a x^2, b -> b x, ...
                   const Complex<R> x = pt.x[0];
                   const Complex<R> omega = eval_omega(OmegaSpec<R>{pt.a * x * x, {pt.b * x, pt.c * x, pt.d * x, pt.e * x}, pt.nome, N});
                   // The q^{k} weight of the single-variable sum matches q^{i k_i} at i = 1.
                   return TrialOutcome{double(rel(sides.lhs, omega)), dump_cn(pt)};
                 }});
  out.push_back({"cn_jackson_summation_order", 1e-12, [&region](Rng& rng) -> std::optional<TrialOutcome> {
                   Draw<R> draw{rng, region};
                   auto pt = draw_cn(draw, 2, 3);
                   pt.e = cn_jackson_e(pt);
                   const auto fwd = cn_jackson_sides(pt, SummationOrder::Forward);
                   if (fwd.condition > kMaxSeriesCondition) return std::nullopt;
                   const auto rev = cn_jackson_sides(pt, SummationOrder::Reverse);
                   return TrialOutcome{double(rel(fwd.lhs, rev.lhs)), dump_cn(pt)};
                 }});
  out.push_back({"omega_one_row_is_omega", 1e-12, [&region](Rng& rng) -> std::optional<TrialOutcome> {
                   Draw<R> draw{rng, region};
                   const int N = rng.uniform_int(0, 4);
                   auto pt = draw_cn(draw, 1, N);
                   pt.g = conjecture_g(pt);
                   const std::vector<Complex<R>> upper{pt.b, pt.c, pt.d, pt.e, pt.f, pt.g};
                   const auto multi = sum_Omega(pt.a, upper, pt.nome, pt.x[0], 1, N);
                   if (multi.condition() > kTightSeriesCondition) return std::nullopt;
                   const Complex<R> single = eval_omega(OmegaSpec<R>{pt.a, upper, pt.nome, N});
                   return TrialOutcome{double(rel(multi.value, single)), dump_cn(pt)};
                 }});
  out.push_back({"omega_N0_is_one", 0.0, [&region](Rng& rng) -> std::optional<TrialOutcome> {
                   Draw<R> draw{rng, region};
                   const int n = rng.uniform_int(1, 4);
                   auto pt = draw_cn(draw, n, 0);
                   pt.g = conjecture_g(pt);
                   const Complex<R> v = eval_Omega(pt.a, {pt.b, pt.c, pt.d, pt.e, pt.f, pt.g}, pt.nome, pt.x[0], n, 0);
                   return TrialOutcome{double(std::abs(v - Complex<R>(1))), dump_cn(pt)};
                 }});
  out.push_back({"omega_x1_collapse", 1e-10, [&region](Rng& rng) -> std::optional<TrialOutcome> {
                   Draw<R> draw{rng, region};
                   const int n = rng.uniform_int(1, 3), N = rng.uniform_int(0, 3);
                   auto pt = draw_cn(draw, n, N);
                   pt.x[0] = Complex<R>(1);
                   pt.g = conjecture_g(pt);
                   const std::vector<Complex<R>> upper{pt.b, pt.c, pt.d, pt.e, pt.f, pt.g};
                   const auto one = sum_omega(OmegaSpec<R>{pt.a, upper, pt.nome, N});
                   // The multinomial expansion sums all products of n terms, so the
                   // condition of the n-th power is that of the sum to the n-th.
                   if (std::pow(double(one.condition()), n) > kTightSeriesCondition * kTightSeriesCondition)
                     return std::nullopt;
                   const Complex<R> collapsed = eval_Omega_at_x1(pt.a, upper, pt.nome, n, N);
                   return TrialOutcome{double(rel(collapsed, ipow(one.value, n))), dump_cn(pt)};
                 }});
  out.push_back({"omega_continuity_at_x1", 1e-3, [&region](Rng& rng) -> std::optional<TrialOutcome> {
                   Draw<R> draw{rng, region};
                   const int n = 2, N = rng.uniform_int(1, 2);
                   auto pt = draw_cn(draw, n, N);
                   pt.x[0] = Complex<R>(1);
                   pt.g = conjecture_g(pt);
                   const std::vector<Complex<R>> upper{pt.b, pt.c, pt.d, pt.e, pt.f, pt.g};
                   const Complex<R> collapsed = eval_Omega_at_x1(pt.a, upper, pt.nome, n, N);
                   // Move x off 1 on both sides, keeping the balancing condition by
                   // re-solving g; the mean cancels the first-order term.
                   auto off = [&](R h) -> std::optional<Complex<R>> {
                     auto moved = pt;
                     moved.x[0] = Complex<R>(R(1) + h);
                     moved.g = conjecture_g(moved);
                     const auto s = sum_Omega(pt.a, {pt.b, pt.c, pt.d, pt.e, pt.f, moved.g}, pt.nome, moved.x[0], n, N);
                     if (s.condition() > kMaxSeriesCondition) return std::nullopt;
                     return s.value;
                   };
                   const auto above = off(R(1e-4)), below = off(R(-1e-4));
                   if (!above || !below) return std::nullopt;
                   return TrialOutcome{double(rel((*above + *below) / R(2), collapsed)), dump_cn(pt)};
                 }});
  return out;
}

template <std::floating_point R>
std::vector<Check> conjecture_checks(const SuiteOptions& opt) {
  const auto& region = opt.region;
  const int n = opt.n, Nmax = opt.N;
  std::vector<Check> out;
  out.push_back({"conjecture_transformation", 1e-7, [&region, n, Nmax](Rng& rng) -> std::optional<TrialOutcome> {
                   Draw<R> draw{rng, region};
                   const int N = rng.uniform_int(0, Nmax);
                   auto pt = draw_cn(draw, n, N);
                   pt.g = conjecture_g(pt);
                   const auto sides = conjecture_sides(pt);
                   if (sides.condition > kMaxSeriesCondition) return std::nullopt;
                   auto dumped = dump_cn(pt);
                   dump(dumped, "f", pt.f);
                   dump(dumped, "g", pt.g);
                   return TrialOutcome{double(sides.rel_error()), dumped};
                 }});
  out.push_back({"omega87_summation", 1e-7, [&region, n, Nmax](Rng& rng) -> std::optional<TrialOutcome> {
                   Draw<R> draw{rng, region};
                   const int N = rng.uniform_int(0, Nmax);
                   auto pt = draw_cn(draw, n, N);
                   pt.e = omega87_e(pt);
                   const auto sides = omega87_sides(pt);
                   if (sides.condition > kMaxSeriesCondition) return std::nullopt;
                   return TrialOutcome{double(sides.rel_error()), dump_cn(pt)};
                 }});
  return out;
}

template <std::floating_point R>
std::vector<Check> checks_for(const std::string& name, const SuiteOptions& opt) {
  if (name == "kernel") return kernel_checks<R>(opt);
  if (name == "inversion") return inversion_checks<R>(opt);
  if (name == "determinants") return determinant_checks<R>(opt);
  if (name == "cn") return cn_checks<R>(opt);
  return conjecture_checks<R>(opt);
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"kernel", "inversion", "determinants", "cn", "conjecture"};
  return names;
}

VerificationReport run_suite(const std::string& name, const SuiteOptions& options) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw Error(ErrorKind::InvalidArgument, "unknown suite '" + name + "'");
  if (options.trials < 1) throw Error(ErrorKind::InvalidArgument, "trials must be at least 1");
  if (name == "conjecture" && (options.n < 1 || options.N < 0 || options.n > 6 || options.N > 8))
    throw Error(ErrorKind::InvalidArgument, "conjecture suite needs 1 <= n <= 6 and 0 <= N <= 8");

  detail::Stopwatch watch;
  VerificationReport report;
  report.target = name;
  report.kind = "suite";
  report.trials = options.trials;
  report.seed = options.seed;
  report.precision = to_string(options.precision);

  auto checks = options.precision == Precision::Extended ? checks_for<long double>(name, options)
                                                         : checks_for<double>(name, options);
  double tol = 0;
  for (auto& check : checks) {
    if (options.tol) check.tol = *options.tol;
    tol = std::max(tol, check.tol);
  }
  report.tol = tol;
  detail::run_checks(report, name, checks, options.trials, options.seed, options.region.max_resamples);
  if (name == "conjecture" && !options.strict_conjecture) report.finding = !report.failures.empty();
  report.wall_time_ms = watch.elapsed_ms();
  return report;
}

}  // namespace ellhyp
