// Bailey transformation, Jackson sum, the two-base sums and the r-stretched
// very-well-poised summations.

#include "support.hpp"

namespace ellhyp::catalog {
namespace {

struct BaileyTransform {
  template <std::floating_point R>
  static void solve(Point<R>& pt) {
    pt.v["g"] = ipow(pt("a"), 3) * ipow(pt.q(), pt.n + 2) / (pt("b") * pt("c") * pt("d") * pt("e") * pt("f"));
  }
  template <std::floating_point R>
  static Constraints<R> constraints(const Point<R>& pt) {
    return {{pt("b") * pt("c") * pt("d") * pt("e") * pt("f") * pt("g"), ipow(pt("a"), 3) * ipow(pt.q(), pt.n + 2)}};
  }
  template <std::floating_point R>
  static IdentityValue<R> eval(const Point<R>& pt) {
    const C<R> a = pt("a"), b = pt("b"), c = pt("c"), d = pt("d"), e = pt("e"), f = pt("f"), g = pt("g");
    const C<R> q = pt.q();
    const int n = pt.n;
    const auto lhs = lhs_omega(a, {b, c, d, e, f, g, ipow(q, -n)}, q, pt.p(), n);
    const C<R> lam = a * a * q / (b * c * d);
    const C<R> rhs = rhs_ratio({a * q, a * q / (e * f), lam * q / e, lam * q / f},
                               {a * q / e, a * q / f, lam * q / (e * f), lam * q}, pt.nome, n) *
                     eval_omega(OmegaSpec<R>{lam, {lam * b / a, lam * c / a, lam * d / a, e, f, g}, pt.nome, n});
    return lhs.finish(rhs);
  }
};

struct JacksonSum {
  template <std::floating_point R>
  static void solve(Point<R>& pt) {
    pt.v["e"] = pt("a") * pt("a") * ipow(pt.q(), pt.n + 1) / (pt("b") * pt("c") * pt("d"));
  }
  template <std::floating_point R>
  static Constraints<R> constraints(const Point<R>& pt) {
    return {{pt("b") * pt("c") * pt("d") * pt("e"), pt("a") * pt("a") * ipow(pt.q(), pt.n + 1)}};
  }
  template <std::floating_point R>
  static IdentityValue<R> eval(const Point<R>& pt) {
    const C<R> a = pt("a"), b = pt("b"), c = pt("c"), d = pt("d"), e = pt("e"), q = pt.q();
    const int n = pt.n;
    const auto lhs = lhs_omega(a, {b, c, d, e, ipow(q, -n)}, q, pt.p(), n);
    const C<R> rhs = rhs_ratio({a * q, a * q / (b * c), a * q / (b * d), a * q / (c * d)},
                               {a * q / b, a * q / c, a * q / d, a * q / (b * c * d)}, pt.nome, n);
    return lhs.finish(rhs);
  }
};

/// Left side shared by the two-base sums, with d general.
template <std::floating_point R>
LhsSum<R> two_base_lhs(C<R> a, C<R> b, C<R> c, C<R> d, C<R> r, C<R> q, C<R> p, int n) {
  LhsSum<R> sum;
  const C<R> base = eval_E_denominator(a, p, "E(a)") * eval_E_denominator(b, p, "E(b)");
  for (int k = 0; k <= n; ++k) {
    const C<R> qk = ipow(q, k), rk = ipow(r, k);
    C<R> t = eval_E(a * qk * rk, p) * eval_E(b * rk / qk, p) / base * qk;
    t *= lhs_ratio({a / c, c / b}, {q / (b * d), a * d * q}, q, p, k);
    t *= lhs_ratio({a * b * d, C<R>(1) / d}, {c * r, a * b * r / c}, r, p, k);
    sum.add(t);
  }
  return sum;
}

struct TwoBaseGeneral {
  template <std::floating_point R>
  static void solve(Point<R>&) {}
  template <std::floating_point R>
  static Constraints<R> constraints(const Point<R>&) {
    return {};
  }
  template <std::floating_point R>
  static IdentityValue<R> eval(const Point<R>& pt) {
    const C<R> a = pt("a"), b = pt("b"), c = pt("c"), d = pt("d"), r = pt("r"), q = pt.q(), p = pt.p();
    const int n = pt.n;
    const Nome<R> rb = pt.nome.with_base(r);
    const auto lhs = two_base_lhs(a, b, c, d, r, q, p, n);
    const C<R> qn = ipow(q, -n), rn = ipow(r, -n);
    const C<R> tail = rhs_ratio({a / c, b * qn / c}, {b * d * qn, a * d}, pt.nome, n + 1) *
                      rhs_ratio({a * b * d, d * rn}, {rn / c, a * b / c}, rb, n + 1);
    const C<R> rhs = rhs_E_ratio({c, a * b / c, a * d, b * d}, {a, b, c * d, a * b * d / c}, p) * (C<R>(1) - tail);
    return lhs.finish(rhs);
  }
};

struct TwoBaseSum {
  template <std::floating_point R>
  static void solve(Point<R>& pt) {
    pt.v["d"] = ipow(pt("r"), pt.n);
  }
  template <std::floating_point R>
  static Constraints<R> constraints(const Point<R>& pt) {
    return {{pt("d"), ipow(pt("r"), pt.n)}};
  }
  template <std::floating_point R>
  static IdentityValue<R> eval(const Point<R>& pt) {
    const C<R> a = pt("a"), b = pt("b"), c = pt("c"), r = pt("r"), d = pt("d"), p = pt.p();
    const auto lhs = two_base_lhs(a, b, c, d, r, pt.q(), p, pt.n);
    const C<R> rhs = rhs_E_ratio({c, a * b / c, a * d, b * d}, {a, b, c * d, a * b * d / c}, p);
    return lhs.finish(rhs);
  }
};

template <int Stretch>
struct StretchedSum {
  template <std::floating_point R>
  static void solve(Point<R>&) {}
  template <std::floating_point R>
  static Constraints<R> constraints(const Point<R>&) {
    return {};
  }
  template <std::floating_point R>
  static IdentityValue<R> eval(const Point<R>& pt) {
    const C<R> a = pt("a"), b = pt("b"), c = pt("c"), q = pt.q();
    const int n = pt.n;
    const C<R> Q = ipow(q, Stretch);
    std::vector<C<R>> upper{c, a * b / c};
    for (int i = 1; i <= Stretch; ++i) upper.push_back(b * ipow(q, i));
    for (int i = 0; i < Stretch; ++i) upper.push_back(a * ipow(q, n + i));
    upper.push_back(ipow(Q, -n));
    const auto lhs = lhs_omega(a * b, upper, Q, pt.p(), n);
    const Nome<R> nq = pt.base(Stretch);
    const C<R> rhs = rhs_ratio({a / c, c / b}, {a, C<R>(1) / b}, pt.nome, n) *
                     rhs_ratio({Q, a * b * Q}, {c * Q, a * b * Q / c}, nq, n);
    return lhs.finish(rhs);
  }
};

template <int Stretch>
Identity stretched_identity(int n_max) {
  Identity meta{.id = "thmr_r" + std::to_string(Stretch),
                .description = "very-well-poised summation in base q^" + std::to_string(Stretch) +
                               " with " + std::to_string(2 * Stretch + 6) + "omega" + std::to_string(2 * Stretch + 5),
                .free_params = {"a", "b", "c"},
                .n_max = n_max,
                .stretch = Stretch};
  return make_identity<StretchedSum<Stretch>>(meta);
}

}  // namespace

void register_basic(std::vector<Identity>& out) {
  out.push_back(make_identity<BaileyTransform>({.id = "e109",
                                                .description = "elliptic Bailey transformation of a terminating 10omega9",
                                                .free_params = {"a", "b", "c", "d", "e", "f"},
                                                .solved_params = {"g"},
                                                .n_max = 5}));
  out.push_back(make_identity<JacksonSum>({.id = "e87",
                                           .description = "elliptic Jackson summation of a terminating 8omega7",
                                           .free_params = {"a", "b", "c", "d"},
                                           .solved_params = {"e"},
                                           .n_max = 6}));
  out.push_back(make_identity<TwoBaseGeneral>({.id = "gr_sum_general",
                                               .description = "two-base summation with free d (difference form)",
                                               .free_params = {"a", "b", "c", "d", "r"},
                                               .n_max = 5,
                                               .second_base = true}));
  out.push_back(make_identity<TwoBaseSum>({.id = "sum1",
                                           .description = "two-base summation at d = r^n",
                                           .free_params = {"a", "b", "c", "r"},
                                           .solved_params = {"d"},
                                           .n_max = 5,
                                           .second_base = true}));
  out.push_back(stretched_identity<1>(4));
  out.push_back(stretched_identity<2>(4));
  out.push_back(stretched_identity<3>(3));
  out.push_back(stretched_identity<4>(2));
}

}  // namespace ellhyp::catalog
