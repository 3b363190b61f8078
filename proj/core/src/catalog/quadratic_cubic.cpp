// Quadratic and cubic transformations and the summations that follow by
// specializing them.

#include "support.hpp"

namespace ellhyp::catalog {
namespace {

/// sum E(aq^{3k})/E(a) (b,c,d;q)_k/(aq^2/b,aq^2/c,aq^2/d;q^2)_k
///     (e,f,q^{-2n};q^2)_k/(aq/e,aq/f,aq^{2n+1};q)_k q^k
template <std::floating_point R>
LhsSum<R> quadratic_lhs(C<R> a, C<R> b, C<R> c, C<R> d, C<R> e, C<R> f, C<R> q, C<R> p, int n) {
  const C<R> q2 = q * q;
  LhsSum<R> sum;
  for (int k = 0; k <= n; ++k) {
    C<R> t = lhs_vwp(a, ipow(q, 3 * k), p) * ipow(q, k);
    t *= lhs_ratio({b, c, d}, {a * q / e, a * q / f, a * ipow(q, 2 * n + 1)}, q, p, k);
    t *= lhs_ratio({e, f, ipow(q, -2 * n)}, {a * q2 / b, a * q2 / c, a * q2 / d}, q2, p, k);
    sum.add(t);
  }
  return sum;
}

/// sum E(aq^{4k})/E(a) (b,c;q)_k/(aq^3/b,aq^3/c;q^3)_k (d;q)_{2k}/(aq/d;q)_{2k}
///     (e,q^{-3n};q^3)_k/(aq/e,aq^{3n+1};q)_k q^k
template <std::floating_point R>
LhsSum<R> cubic_lhs(C<R> a, C<R> b, C<R> c, C<R> d, C<R> e, C<R> q, C<R> p, int n) {
  const C<R> q3 = ipow(q, 3);
  LhsSum<R> sum;
  for (int k = 0; k <= n; ++k) {
    C<R> t = lhs_vwp(a, ipow(q, 4 * k), p) * ipow(q, k);
    t *= lhs_ratio({b, c}, {a * q / e, a * ipow(q, 3 * n + 1)}, q, p, k);
    t *= lhs_ratio({e, ipow(q, -3 * n)}, {a * q3 / b, a * q3 / c}, q3, p, k);
    t *= lhs_ratio({d}, {a * q / d}, q, p, 2 * k);
    sum.add(t);
  }
  return sum;
}

enum class Choice { B, E };

template <Choice G>
struct QuadraticTransform {
  template <std::floating_point R>
  static void solve(Point<R>& pt) {
    const C<R> a = pt("a"), q = pt.q();
    pt.v["d"] = a * q / (pt("b") * pt("c"));
    pt.v["f"] = a * a * ipow(q, 2 * pt.n + 1) / pt("e");
    pt.v["g"] = G == Choice::B ? a / pt("b") : a / pt("e");
  }
  template <std::floating_point R>
  static Constraints<R> constraints(const Point<R>& pt) {
    const C<R> a = pt("a"), q = pt.q();
    return {{pt("b") * pt("c") * pt("d"), a * q},
            {pt("e") * pt("f"), a * a * ipow(q, 2 * pt.n + 1)},
            {pt("g") * (G == Choice::B ? pt("b") : pt("e")), a}};
  }
  template <std::floating_point R>
  static IdentityValue<R> eval(const Point<R>& pt) {
    const C<R> a = pt("a"), b = pt("b"), c = pt("c"), d = pt("d"), e = pt("e"), f = pt("f"), g = pt("g");
    const C<R> q = pt.q(), q2 = q * q;
    const int n = pt.n;
    const auto lhs = quadratic_lhs(a, b, c, d, e, f, q, pt.p(), n);
    const Nome<R> nq = pt.base(2);
    const C<R> a2 = a * a * q2;
    const C<R> pre = rhs_ratio({a * q2, a2 / (b * c * e), a2 / (b * d * e * g), a * g * q2 / (c * d)},
                               {a2 / (b * e * g), a * g * q2 / c, a * q2 / d, a2 / (b * c * d * e)}, nq, n);
    const C<R> series =
        eval_omega(OmegaSpec<R>{a * g / c, {a / c, g * q2 / c, b * e * g / a, d, f, g}, nq, n});
    return lhs.finish(pre * series);
  }
};

template <Choice F>
struct CubicTransform {
  template <std::floating_point R>
  static void solve(Point<R>& pt) {
    const C<R> a = pt("a"), q = pt.q();
    pt.v["d"] = a * q / (pt("b") * pt("c"));
    pt.v["e"] = a * a * ipow(q, 3 * pt.n + 1) / pt("d");
    pt.v["f"] = F == Choice::B ? a / pt("b") : a / pt("e");
  }
  template <std::floating_point R>
  static Constraints<R> constraints(const Point<R>& pt) {
    const C<R> a = pt("a"), q = pt.q();
    return {{pt("b") * pt("c") * pt("d"), a * q},
            {pt("d") * pt("e"), a * a * ipow(q, 3 * pt.n + 1)},
            {pt("f") * (F == Choice::B ? pt("b") : pt("e")), a}};
  }
  template <std::floating_point R>
  static IdentityValue<R> eval(const Point<R>& pt) {
    const C<R> a = pt("a"), b = pt("b"), c = pt("c"), d = pt("d"), e = pt("e"), f = pt("f");
    const C<R> q = pt.q(), q3 = ipow(q, 3);
    const int n = pt.n;
    const auto lhs = cubic_lhs(a, b, c, d, e, q, pt.p(), n);
    const Nome<R> nq = pt.base(3);
    const C<R> a2 = a * a * q3;
    const C<R> pre = rhs_ratio({a * q3, a2 / (b * c * e), a2 / (b * d * e * f), a * f * q3 / (c * d)},
                               {a2 / (b * e * f), a * q3 * f / c, a * q3 / d, a2 / (b * c * d * e)}, nq, n);
    const C<R> series =
        eval_omega(OmegaSpec<R>{a * f / c, {a / c, f * q3 / c, b * e * f / a, d, d * q, f}, nq, n});
    return lhs.finish(pre * series);
  }
};

/// Quadratic summation: g = 1 through b = a or e = a.
template <Choice Which>
struct QuadraticSum {
  template <std::floating_point R>
  static void solve(Point<R>& pt) {
    const C<R> a = pt("a"), q = pt.q();
    if constexpr (Which == Choice::B) {
      pt.v["b"] = a;
    } else {
      pt.v["e"] = a;
    }
    pt.v["d"] = a * q / (pt("b") * pt("c"));
    pt.v["f"] = a * a * ipow(q, 2 * pt.n + 1) / pt("e");
  }
  template <std::floating_point R>
  static Constraints<R> constraints(const Point<R>& pt) {
    const C<R> a = pt("a"), q = pt.q();
    return {{pt("b") * pt("c") * pt("d"), a * q},
            {pt("e") * pt("f"), a * a * ipow(q, 2 * pt.n + 1)},
            {Which == Choice::B ? pt("b") : pt("e"), a}};
  }
  template <std::floating_point R>
  static IdentityValue<R> eval(const Point<R>& pt) {
    const C<R> a = pt("a"), b = pt("b"), c = pt("c"), d = pt("d"), e = pt("e"), f = pt("f");
    const C<R> q = pt.q(), q2 = q * q, a2 = a * a * q2;
    const auto lhs = quadratic_lhs(a, b, c, d, e, f, q, pt.p(), pt.n);
    const C<R> rhs = rhs_ratio({a * q2, a2 / (b * c * e), a2 / (b * d * e), a * q2 / (c * d)},
                               {a2 / (b * e), a * q2 / c, a * q2 / d, a2 / (b * c * d * e)}, pt.base(2), pt.n);
    return lhs.finish(rhs);
  }
};

template <Choice Which>
struct CubicSum {
  template <std::floating_point R>
  static void solve(Point<R>& pt) {
    const C<R> a = pt("a"), q = pt.q();
    if constexpr (Which == Choice::B) {
      pt.v["b"] = a;
      pt.v["d"] = a * q / (pt("b") * pt("c"));
      pt.v["e"] = a * a * ipow(q, 3 * pt.n + 1) / pt("d");
    } else {
      pt.v["e"] = a;
      pt.v["d"] = a * ipow(q, 3 * pt.n + 1);
      pt.v["c"] = a * q / (pt("b") * pt("d"));
    }
  }
  template <std::floating_point R>
  static Constraints<R> constraints(const Point<R>& pt) {
    const C<R> a = pt("a"), q = pt.q();
    return {{pt("b") * pt("c") * pt("d"), a * q},
            {pt("d") * pt("e"), a * a * ipow(q, 3 * pt.n + 1)},
            {Which == Choice::B ? pt("b") : pt("e"), a}};
  }
  template <std::floating_point R>
  static IdentityValue<R> eval(const Point<R>& pt) {
    const C<R> a = pt("a"), b = pt("b"), c = pt("c"), d = pt("d"), e = pt("e");
    const C<R> q = pt.q(), q3 = ipow(q, 3), a2 = a * a * q3;
    const auto lhs = cubic_lhs(a, b, c, d, e, q, pt.p(), pt.n);
    const C<R> rhs = rhs_ratio({a * q3, a2 / (b * c * e), a2 / (b * d * e), a * q3 / (c * d)},
                               {a2 / (b * e), a * q3 / c, a * q3 / d, a2 / (b * c * d * e)}, pt.base(3), pt.n);
    return lhs.finish(rhs);
  }
};

/// Cubic summation at d = a, with bc = q and e = aq^{3n+1}.
struct CubicSumDA {
  template <std::floating_point R>
  static void solve(Point<R>& pt) {
    const C<R> a = pt("a"), q = pt.q();
    pt.v["c"] = q / pt("b");
    pt.v["d"] = a;
    pt.v["e"] = a * ipow(q, 3 * pt.n + 1);
  }
  template <std::floating_point R>
  static Constraints<R> constraints(const Point<R>& pt) {
    const C<R> a = pt("a"), q = pt.q();
    return {{pt("b") * pt("c"), q}, {pt("d"), a}, {pt("e"), a * ipow(q, 3 * pt.n + 1)}};
  }
  template <std::floating_point R>
  static IdentityValue<R> eval(const Point<R>& pt) {
    const C<R> a = pt("a"), b = pt("b"), c = pt("c"), d = pt("d"), e = pt("e");
    const C<R> q = pt.q(), q3 = ipow(q, 3);
    const auto lhs = cubic_lhs(a, b, c, d, e, q, pt.p(), pt.n);
    const C<R> rhs = rhs_ratio({a * q * q, a * q3, b * q, c * q}, {q, q * q, a * q3 / b, a * q3 / c}, pt.base(3), pt.n);
    return lhs.finish(rhs);
  }
};

}  // namespace

void register_quadratic_cubic(std::vector<Identity>& out) {
  out.push_back(make_identity<QuadraticTransform<Choice::B>>(
      {.id = "etrafo_quadratic_gab",
       .description = "quadratic transformation to a 10omega9 in base q^2, case g = a/b",
       .free_params = {"a", "b", "c", "e"},
       .solved_params = {"d", "f", "g"},
       .n_max = 4}));
  out.push_back(make_identity<QuadraticTransform<Choice::E>>(
      {.id = "etrafo_quadratic_gae",
       .description = "quadratic transformation to a 10omega9 in base q^2, case g = a/e",
       .free_params = {"a", "b", "c", "e"},
       .solved_params = {"d", "f", "g"},
       .n_max = 4}));
  out.push_back(make_identity<CubicTransform<Choice::B>>(
      {.id = "etrafo2_cubic_fab",
       .description = "cubic transformation to a 10omega9 in base q^3, case f = a/b",
       .free_params = {"a", "b", "c"},
       .solved_params = {"d", "e", "f"},
       .n_max = 3}));
  out.push_back(make_identity<CubicTransform<Choice::E>>(
      {.id = "etrafo2_cubic_fae",
       .description = "cubic transformation to a 10omega9 in base q^3, case f = a/e",
       .free_params = {"a", "b", "c"},
       .solved_params = {"d", "e", "f"},
       .n_max = 3}));
  out.push_back(make_identity<QuadraticSum<Choice::B>>({.id = "cor1_ba",
                                                        .description = "quadratic summation, b = a",
                                                        .free_params = {"a", "c", "e"},
                                                        .solved_params = {"b", "d", "f"},
                                                        .n_max = 4}));
  out.push_back(make_identity<QuadraticSum<Choice::E>>({.id = "cor1_ea",
                                                        .description = "quadratic summation, e = a",
                                                        .free_params = {"a", "b", "c"},
                                                        .solved_params = {"e", "d", "f"},
                                                        .n_max = 4}));
  out.push_back(make_identity<CubicSum<Choice::B>>({.id = "cor_cubic_ba",
                                                    .description = "cubic summation, b = a",
                                                    .free_params = {"a", "c"},
                                                    .solved_params = {"b", "d", "e"},
                                                    .n_max = 3}));
  out.push_back(make_identity<CubicSum<Choice::E>>({.id = "cor_cubic_ea",
                                                    .description = "cubic summation, e = a",
                                                    .free_params = {"a", "b"},
                                                    .solved_params = {"e", "d", "c"},
                                                    .n_max = 3}));
  out.push_back(make_identity<CubicSumDA>({.id = "cor_cubic_da",
                                           .description = "cubic summation, d = a with bc = q",
                                           .free_params = {"a", "b"},
                                           .solved_params = {"c", "d", "e"},
                                           .n_max = 3}));
}

}  // namespace ellhyp::catalog
