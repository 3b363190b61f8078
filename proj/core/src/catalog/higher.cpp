// Transformations mixing bases q, q^2, q^3 (and q^4 in the quartic case),
// their mod-2/3/4 case splits, and the summations they specialize to.

#include "support.hpp"

namespace ellhyp::catalog {
namespace {

/// sum_{k<=n} E(aq^{3k})/E(a) (u1,u2,u3;q^2)_k/(aq/u1,aq/u2,aq/u3;q)_k
///   (v1,v2,q^{-n};q)_k/(aq^2/v1,aq^2/v2,aq^{n+2};q^2)_k q^k
template <std::floating_point R>
LhsSum<R> mixed2_lhs(C<R> a, C<R> u1, C<R> u2, C<R> u3, C<R> v1, C<R> v2, C<R> q, C<R> p, int n) {
  const C<R> q2 = q * q;
  LhsSum<R> sum;
  for (int k = 0; k <= n; ++k) {
    C<R> t = lhs_vwp(a, ipow(q, 3 * k), p) * ipow(q, k);
    t *= lhs_ratio({u1, u2, u3}, {a * q2 / v1, a * q2 / v2, a * ipow(q, n + 2)}, q2, p, k);
    t *= lhs_ratio({v1, v2, ipow(q, -n)}, {a * q / u1, a * q / u2, a * q / u3}, q, p, k);
    sum.add(t);
  }
  return sum;
}

/// sum_{k<=n/2} E(aq^{4k})/E(a) (u1,u2;q^3)_k/(aq/u1,aq/u2;q)_k
///   (q^{-n};q)_{2k}/(aq^{n+1};q)_{2k} (v1,v2;q)_k/(aq^3/v1,aq^3/v2;q^3)_k q^k
template <std::floating_point R>
LhsSum<R> mixed3_even_lhs(C<R> a, C<R> u1, C<R> u2, C<R> v1, C<R> v2, C<R> q, C<R> p, int n) {
  const C<R> q3 = ipow(q, 3);
  LhsSum<R> sum;
  for (int k = 0; 2 * k <= n; ++k) {
    C<R> t = lhs_vwp(a, ipow(q, 4 * k), p) * ipow(q, k);
    t *= lhs_ratio({u1, u2}, {a * q3 / v1, a * q3 / v2}, q3, p, k);
    t *= lhs_ratio({v1, v2}, {a * q / u1, a * q / u2}, q, p, k);
    t *= lhs_ratio({ipow(q, -n)}, {a * ipow(q, n + 1)}, q, p, 2 * k);
    sum.add(t);
  }
  return sum;
}

/// sum_{k<=n} E(aq^{4k})/E(a) (u1,u2;q^3)_k/(aq/u1,aq/u2;q)_k
///   (w;q)_{2k}/(aq/w;q)_{2k} (v,q^{-n};q)_k/(aq^3/v,aq^{n+3};q^3)_k q^k
template <std::floating_point R>
LhsSum<R> mixed3_lhs(C<R> a, C<R> u1, C<R> u2, C<R> w, C<R> v, C<R> q, C<R> p, int n) {
  const C<R> q3 = ipow(q, 3);
  LhsSum<R> sum;
  for (int k = 0; k <= n; ++k) {
    C<R> t = lhs_vwp(a, ipow(q, 4 * k), p) * ipow(q, k);
    t *= lhs_ratio({u1, u2}, {a * q3 / v, a * ipow(q, n + 3)}, q3, p, k);
    t *= lhs_ratio({v, ipow(q, -n)}, {a * q / u1, a * q / u2}, q, p, k);
    t *= lhs_ratio({w}, {a * q / w}, q, p, 2 * k);
    sum.add(t);
  }
  return sum;
}

/// (aq,aq/bc;q)_n (aq^{1-n}/b,aq^{1-n}/c;q^2)_n / ((aq/b,aq/c;q)_n (aq^{1-n},aq^{1-n}/bc;q^2)_n)
template <std::floating_point R>
C<R> mixed2_prefactor(C<R> a, C<R> b, C<R> c, const Nome<R>& nome, int n) {
  const C<R> q = nome.q, s = a * ipow(q, 1 - n);
  return rhs_ratio({a * q, a * q / (b * c)}, {a * q / b, a * q / c}, nome, n) *
         rhs_ratio({s / b, s / c}, {s, s / (b * c)}, nome.power_base(2), n);
}

/// (aq;q)_n (aq^{2-n}/b;q^3)_n / ((aq/b;q)_n (aq^{2-n};q^3)_n)
template <std::floating_point R>
C<R> mixed3_even_prefactor(C<R> a, C<R> b, const Nome<R>& nome, int n) {
  const C<R> q = nome.q, s = a * ipow(q, 2 - n);
  return rhs_ratio({a * q}, {a * q / b}, nome, n) * rhs_ratio({s / b}, {s}, nome.power_base(3), n);
}

/// (A,A/bc,B/bd,B/cd;Q)_m / (A/b,A/c,B/d,B/bcd;Q)_m
template <std::floating_point R>
C<R> four_ratio(C<R> A, C<R> B, C<R> b, C<R> c, C<R> d, const Nome<R>& base, int m) {
  return rhs_ratio({A, A / (b * c), B / (b * d), B / (c * d)}, {A / b, A / c, B / d, B / (b * c * d)}, base, m);
}

struct Mixed2Transform {
  template <std::floating_point R>
  static void solve(Point<R>& pt) {
    const C<R> a = pt("a"), q = pt.q();
    pt.v["d"] = a * a * q / (pt("b") * pt("c"));
    pt.v["f"] = a * ipow(q, pt.n + 1) / pt("e");
  }
  template <std::floating_point R>
  static Constraints<R> constraints(const Point<R>& pt) {
    const C<R> a = pt("a"), q = pt.q();
    return {{pt("b") * pt("c") * pt("d"), a * a * q}, {pt("e") * pt("f"), a * ipow(q, pt.n + 1)}};
  }
  template <std::floating_point R>
  static IdentityValue<R> eval(const Point<R>& pt) {
    const C<R> a = pt("a"), b = pt("b"), c = pt("c"), d = pt("d"), e = pt("e"), f = pt("f"), q = pt.q();
    const int n = pt.n;
    const auto lhs = mixed2_lhs(a, b, c, d, e, f, q, pt.p(), n);
    const std::size_t drop = n % 2 == 0 ? 6 : 5;
    const C<R> series = omega_dropping(a * a / (e * f), {b, c, d, a / e, a / f, ipow(q, 1 - n), ipow(q, -n)}, drop,
                                       pt.base(2), n / 2);
    return lhs.finish(mixed2_prefactor(a, b, c, pt.nome, n) * series);
  }
};

struct Mixed2SumFA {
  template <std::floating_point R>
  static void solve(Point<R>& pt) {
    const C<R> a = pt("a"), q = pt.q();
    pt.v["d"] = a * a * q / (pt("b") * pt("c"));
    pt.v["e"] = ipow(q, pt.n + 1);
  }
  template <std::floating_point R>
  static Constraints<R> constraints(const Point<R>& pt) {
    const C<R> a = pt("a"), q = pt.q();
    return {{pt("b") * pt("c") * pt("d"), a * a * q}, {pt("e"), ipow(q, pt.n + 1)}};
  }
  template <std::floating_point R>
  static IdentityValue<R> eval(const Point<R>& pt) {
    const C<R> a = pt("a"), b = pt("b"), c = pt("c"), d = pt("d"), e = pt("e"), q = pt.q();
    const int n = pt.n;
    auto out = mixed2_lhs(a, b, c, d, a, e, q, pt.p(), n).finish(mixed2_prefactor(a, b, c, pt.nome, n));
    const int sigma = n % 2;
    out.alt_rhs = four_ratio(a * ipow(q, 2 - sigma), a * ipow(q, 2 - sigma), b, c, d, pt.base(2), (n + sigma) / 2);
    return out;
  }
};

struct GesselStanton {
  template <std::floating_point R>
  static void solve(Point<R>& pt) {
    const C<R> a = pt("a"), q = pt.q();
    pt.v["c"] = a * q / pt("b");
    pt.v["e"] = a * ipow(q, pt.n + 1) / pt("d");
  }
  template <std::floating_point R>
  static Constraints<R> constraints(const Point<R>& pt) {
    const C<R> a = pt("a"), q = pt.q();
    return {{pt("b") * pt("c"), a * q}, {pt("d") * pt("e"), a * ipow(q, pt.n + 1)}};
  }
  template <std::floating_point R>
  static IdentityValue<R> eval(const Point<R>& pt) {
    const C<R> a = pt("a"), b = pt("b"), c = pt("c"), d = pt("d"), e = pt("e"), q = pt.q();
    const int n = pt.n;
    const auto lhs = mixed2_lhs(a, a, b, c, d, e, q, pt.p(), n);
    if (n % 2) return lhs.finish(C<R>(0));
    const C<R> A = a * q * q;
    return lhs.finish(four_ratio(A, A, b, c, d, pt.base(2), n / 2));
  }
};

struct Mixed3EvenTransform {
  template <std::floating_point R>
  static void solve(Point<R>& pt) {
    const C<R> a = pt("a"), q = pt.q();
    pt.v["c"] = a * a * ipow(q, pt.n + 1) / pt("b");
    pt.v["e"] = a * ipow(q, pt.n + 1) / pt("d");
  }
  template <std::floating_point R>
  static Constraints<R> constraints(const Point<R>& pt) {
    const C<R> a = pt("a"), q = pt.q();
    return {{pt("b") * pt("c"), a * a * ipow(q, pt.n + 1)}, {pt("d") * pt("e"), a * ipow(q, pt.n + 1)}};
  }
  template <std::floating_point R>
  static IdentityValue<R> eval(const Point<R>& pt) {
    const C<R> a = pt("a"), b = pt("b"), c = pt("c"), d = pt("d"), e = pt("e"), q = pt.q();
    const int n = pt.n;
    const auto lhs = mixed3_even_lhs(a, b, c, d, e, q, pt.p(), n);
    const auto drop = static_cast<std::size_t>(6 - n % 3);
    const C<R> series = omega_dropping(a * a / (d * e), {b, c, a / d, a / e, ipow(q, 2 - n), ipow(q, 1 - n), ipow(q, -n)},
                                       drop, pt.base(3), n / 3);
    return lhs.finish(mixed3_even_prefactor(a, b, pt.nome, n) * series);
  }
};

struct Mixed3EvenSumEA {
  template <std::floating_point R>
  static void solve(Point<R>& pt) {
    const C<R> a = pt("a"), q = pt.q();
    pt.v["c"] = a * a * ipow(q, pt.n + 1) / pt("b");
    pt.v["d"] = ipow(q, pt.n + 1);
  }
  template <std::floating_point R>
  static Constraints<R> constraints(const Point<R>& pt) {
    const C<R> a = pt("a"), q = pt.q();
    return {{pt("b") * pt("c"), a * a * ipow(q, pt.n + 1)}, {pt("d"), ipow(q, pt.n + 1)}};
  }
  template <std::floating_point R>
  static IdentityValue<R> eval(const Point<R>& pt) {
    const C<R> a = pt("a"), b = pt("b"), c = pt("c"), d = pt("d"), q = pt.q();
    const auto lhs = mixed3_even_lhs(a, b, c, a, d, q, pt.p(), pt.n);
    return lhs.finish(mixed3_even_prefactor(a, b, pt.nome, pt.n));
  }
};

struct Mixed3EvenSumC2 {
  template <std::floating_point R>
  static void solve(Point<R>& pt) {
    const C<R> a = pt("a"), q = pt.q();
    pt.v["b"] = a * ipow(q, pt.n + 1);
    pt.v["d"] = a * ipow(q, pt.n + 1) / pt("c");
  }
  template <std::floating_point R>
  static Constraints<R> constraints(const Point<R>& pt) {
    const C<R> a = pt("a"), q = pt.q();
    return {{pt("b"), a * ipow(q, pt.n + 1)}, {pt("c") * pt("d"), a * ipow(q, pt.n + 1)}};
  }
  template <std::floating_point R>
  static IdentityValue<R> eval(const Point<R>& pt) {
    const C<R> a = pt("a"), b = pt("b"), c = pt("c"), d = pt("d"), q = pt.q();
    const int n = pt.n;
    const auto lhs = mixed3_even_lhs(a, a, b, c, d, q, pt.p(), n);
    if (n % 3 == 2) return lhs.finish(C<R>(0));
    const C<R> A = a * ipow(q, 3);
    return lhs.finish(rhs_ratio({A, A / (b * c), A / (b * d)}, {A / c, A / d, A / (b * c * d)}, pt.base(3), n / 3));
  }
};

template <int Branch>
struct Mixed3Transform {
  template <std::floating_point R>
  static void solve(Point<R>& pt) {
    const C<R> a = pt("a"), q = pt.q();
    pt.v["c"] = a * a * q / (pt("b") * pt("d"));
    pt.v["e"] = a * ipow(q, pt.n + 1) / pt("d");
  }
  template <std::floating_point R>
  static Constraints<R> constraints(const Point<R>& pt) {
    const C<R> a = pt("a"), q = pt.q();
    return {{pt("b") * pt("c") * pt("d"), a * a * q}, {pt("d") * pt("e"), a * ipow(q, pt.n + 1)}};
  }
  template <std::floating_point R>
  static IdentityValue<R> eval(const Point<R>& pt) {
    const C<R> a = pt("a"), b = pt("b"), c = pt("c"), d = pt("d"), e = pt("e"), q = pt.q(), p = pt.p();
    const int n = pt.n;
    const auto lhs = mixed3_lhs(a, b, c, d, e, q, p, n);
    const int sigma = (3 - n % 3) % 3;
    const int m = (n + sigma) / 3;
    const Nome<R> q3 = pt.base(3);
    const C<R> A3 = a * ipow(q, 3 - sigma);
    C<R> pre;
    C<R> a1;
    std::vector<C<R>> upper;
    std::size_t drop = 0;
    if constexpr (Branch == 0) {
      pre = four_ratio(A3, A3, b, c, d, q3, m);
      a1 = a * a / (d * e * q);
      upper = {a / (d * q), a / e, b, c, d, ipow(q, 1 - n), ipow(q, -n)};
      drop = n % 3 == 0 ? 6 : 5;
    } else if constexpr (Branch == 1) {
      pre = four_ratio(A3, a * ipow(q, 2 - sigma), b, c, d, q3, m);
      a1 = a * a / (d * e);
      upper = {a / d, a / e, b, c, d * q, ipow(q, 2 - n), ipow(q, -n)};
      drop = n % 3 == 0 ? 6 : 5;
    } else {
      const C<R> As = a * ipow(q, sigma);
      pre = rhs_E_ratio({As, As / (b * c), a * q / (b * d), a * q / (c * d)}, {As / b, As / c, a * q / d, a * q / (b * c * d)}, p) *
            four_ratio(A3, a * ipow(q, 1 - sigma), b, c, d, q3, m);
      a1 = a * a * q / (d * e);
      upper = {a * q / d, a / e, b, c, d * q * q, ipow(q, 2 - n), ipow(q, 1 - n)};
      drop = n % 3 == 1 ? 6 : 5;
    }
    return lhs.finish(pre * omega_dropping(a1, std::move(upper), drop, q3, n / 3));
  }
};

struct Mixed3SumEA {
  template <std::floating_point R>
  static void solve(Point<R>& pt) {
    const C<R> a = pt("a"), q = pt.q();
    pt.v["d"] = ipow(q, pt.n + 1);
    pt.v["c"] = a * a * q / (pt("b") * pt("d"));
  }
  template <std::floating_point R>
  static Constraints<R> constraints(const Point<R>& pt) {
    const C<R> a = pt("a"), q = pt.q();
    return {{pt("b") * pt("c") * pt("d"), a * a * q}, {pt("d"), ipow(q, pt.n + 1)}};
  }
  template <std::floating_point R>
  static IdentityValue<R> eval(const Point<R>& pt) {
    const C<R> a = pt("a"), b = pt("b"), c = pt("c"), d = pt("d"), q = pt.q();
    const int n = pt.n;
    const auto lhs = mixed3_lhs(a, b, c, d, a, q, pt.p(), n);
    const Nome<R> q3 = pt.base(3);
    C<R> rhs;
    switch (n % 3) {
      case 0: rhs = four_ratio(a * ipow(q, 3), a * ipow(q, 3), b, c, d, q3, n / 3); break;
      case 1: rhs = four_ratio(a * q, a * q, b, c, d, q3, (n + 2) / 3); break;
      default: rhs = four_ratio(a * q * q, a * q, b, c, d, q3, (n + 1) / 3); break;
    }
    return lhs.finish(rhs);
  }
};

struct Mixed3SumChu {
  template <std::floating_point R>
  static void solve(Point<R>& pt) {
    const C<R> a = pt("a"), q = pt.q();
    pt.v["c"] = a * q / pt("b");
    pt.v["d"] = a * ipow(q, pt.n + 1) / pt("c");
  }
  template <std::floating_point R>
  static Constraints<R> constraints(const Point<R>& pt) {
    const C<R> a = pt("a"), q = pt.q();
    return {{pt("b") * pt("c"), a * q}, {pt("c") * pt("d"), a * ipow(q, pt.n + 1)}};
  }
  template <std::floating_point R>
  static IdentityValue<R> eval(const Point<R>& pt) {
    const C<R> a = pt("a"), b = pt("b"), c = pt("c"), d = pt("d"), q = pt.q();
    const int n = pt.n;
    const auto lhs = mixed3_lhs(a, a, b, c, d, q, pt.p(), n);
    if (n % 3) return lhs.finish(C<R>(0));
    const C<R> q3 = ipow(q, 3);
    return lhs.finish(
        rhs_ratio({q, q * q, a * q3, b * b / a}, {b * q, b * q * q, b / a, a * q3 / b}, pt.base(3), n / 3));
  }
};

struct Mixed3SumDA {
  template <std::floating_point R>
  static void solve(Point<R>& pt) {
    const C<R> a = pt("a"), q = pt.q();
    pt.v["c"] = a * q / pt("b");
    pt.v["d"] = ipow(q, pt.n + 1);
  }
  template <std::floating_point R>
  static Constraints<R> constraints(const Point<R>& pt) {
    const C<R> a = pt("a"), q = pt.q();
    return {{pt("b") * pt("c"), a * q}, {pt("d"), ipow(q, pt.n + 1)}};
  }
  template <std::floating_point R>
  static IdentityValue<R> eval(const Point<R>& pt) {
    const C<R> a = pt("a"), b = pt("b"), c = pt("c"), d = pt("d"), q = pt.q();
    const int n = pt.n;
    const auto lhs = mixed3_lhs(a, b, c, a, d, q, pt.p(), n);
    const Nome<R> q3 = pt.base(3);
    switch (n % 3) {
      case 0: {
        const C<R> A = a * ipow(q, 3);
        return lhs.finish(rhs_ratio({A, q * q / b, q * q / c}, {q * q / (b * c), A / b, A / c}, q3, n / 3));
      }
      case 1: return lhs.finish(C<R>(0));
      default: {
        const C<R> A = a * q * q;
        return lhs.finish(rhs_ratio({A, q / b, q / c}, {q / (b * c), A / b, A / c}, q3, (n + 2) / 3));
      }
    }
  }
};

struct QuarticTransform {
  template <std::floating_point R>
  static void solve(Point<R>&) {}
  template <std::floating_point R>
  static Constraints<R> constraints(const Point<R>&) {
    return {};
  }
  template <std::floating_point R>
  static IdentityValue<R> eval(const Point<R>& pt) {
    const C<R> a = pt("a"), b = pt("b"), q = pt.q(), p = pt.p();
    const int n = pt.n;
    const C<R> q2 = q * q, q3 = q2 * q, q4 = q3 * q;
    LhsSum<R> lhs;
    for (int k = 0; k <= n; ++k) {
      C<R> t = lhs_vwp(a, ipow(q, 5 * k), p) * ipow(q, k);
      t *= lhs_ratio({b * b / (a * q2)}, {ipow(q, 1 - 4 * n) / b, a * ipow(q, 4 * n + 1)}, q, p, k);
      t *= lhs_ratio({a * b * ipow(q, 4 * n), ipow(q, -4 * n)}, {a * a * ipow(q, 6) / (b * b)}, q4, p, k);
      t *= lhs_ratio({a * q / b, a * q2 / b, a * q3 / b}, {}, q2, p, k);
      t /= lhs_poch_den(b, q3, p, k) * lhs_poch_den(b * q, q3, p, k) * lhs_poch_den(b * q2, q3, p, k);
      lhs.add(t);
    }
    const Nome<R> n4 = pt.base(4);
    const C<R> pre = rhs_ratio({a * q}, {b}, pt.nome, 4 * n) *
                     rhs_ratio({q4, b * b * b / (a * q2)}, {a * b, a * a * ipow(q, 6) / (b * b)}, n4, n);
    SumAccumulator<R> series;
    const C<R> ab = a * b / q4;
    const C<R> vwp = eval_E_denominator(ab, p, "quartic very-well-poised factor");
    for (int k = 0; k <= n; ++k) {
      series.add(eval_E(a * b * ipow(q, 8 * k - 4), p) / vwp * ipow(q4, k) *
                 rhs_ratio({ab, a * a * q2 / (b * b), b, b / q, b / q2, b / q3},
                           {q4, b * b * b / (a * q2), a, a * q, a * q2, a * q3}, n4, k));
    }
    return lhs.finish(pre * series.value());
  }
};

struct QuarticSum {
  template <std::floating_point R>
  static void solve(Point<R>&) {}
  template <std::floating_point R>
  static Constraints<R> constraints(const Point<R>&) {
    return {};
  }
  template <std::floating_point R>
  static IdentityValue<R> eval(const Point<R>& pt) {
    const C<R> a = pt("a"), q = pt.q(), p = pt.p();
    const int n = pt.n;
    const C<R> q2 = q * q, q3 = q2 * q, q4 = q3 * q;
    LhsSum<R> lhs;
    for (int k = 0; k <= n; ++k) {
      C<R> t = lhs_vwp(a * a, ipow(q, 5 * k), p) * ipow(q, k);
      t *= lhs_ratio({a * a}, {a * ipow(q, 3 - n), a * a * ipow(q, n + 4)}, q4, p, k);
      t *= lhs_ratio({a * ipow(q, n + 1), ipow(q, -n)}, {q}, q, p, k);
      t *= lhs_ratio({a, a * q, a * q2}, {}, q3, p, k);
      t /= lhs_poch_den(a, q2, p, k) * lhs_poch_den(a * q, q2, p, k) * lhs_poch_den(a * q2, q2, p, k);
      lhs.add(t);
    }
    if (n % 4) return lhs.finish(C<R>(0));
    return lhs.finish(rhs_ratio({q, q2, q3, a * a * q4}, {a * q2, a * q3, a * q4, q / a}, pt.base(4), n / 4));
  }
};

bool mod3_is(int n, int r) { return n % 3 == r; }

}  // namespace

void register_higher(std::vector<Identity>& out) {
  out.push_back(make_identity<Mixed2Transform>(
      {.id = "etrafo3",
       .description = "transformation of a q/q^2 mixed series to a 10omega9 in base q^2",
       .free_params = {"a", "b", "c", "e"},
       .solved_params = {"d", "f"},
       .n_max = 6}));
  out.push_back(make_identity<Mixed3EvenTransform>(
      {.id = "etrafo4",
       .description = "transformation of a q/q^3 series with (q^-n;q)_2k to a 10omega9 in base q^3",
       .free_params = {"a", "b", "d"},
       .solved_params = {"c", "e"},
       .n_max = 6}));
  out.push_back(make_identity<Mixed3Transform<0>>(
      {.id = "etrafo5_b0",
       .description = "q/q^3 transformation, first closed form (n not 2 mod 3)",
       .free_params = {"a", "b", "d"},
       .solved_params = {"c", "e"},
       .n_max = 6,
       .branch = [](int n) { return !mod3_is(n, 2); }}));
  out.push_back(make_identity<Mixed3Transform<1>>(
      {.id = "etrafo5_b1",
       .description = "q/q^3 transformation, second closed form (n not 1 mod 3)",
       .free_params = {"a", "b", "d"},
       .solved_params = {"c", "e"},
       .n_max = 6,
       .branch = [](int n) { return !mod3_is(n, 1); }}));
  out.push_back(make_identity<Mixed3Transform<2>>(
      {.id = "etrafo5_b2",
       .description = "q/q^3 transformation, third closed form (n not 0 mod 3)",
       .free_params = {"a", "b", "d"},
       .solved_params = {"c", "e"},
       .n_max = 6,
       .branch = [](int n) { return !mod3_is(n, 0); }}));
  out.push_back(make_identity<Mixed2SumFA>({.id = "cor_etrafo3_fa",
                                            .description = "q/q^2 summation at f = a",
                                            .free_params = {"a", "b", "c"},
                                            .solved_params = {"d", "e"},
                                            .n_max = 6}));
  out.push_back(make_identity<GesselStanton>({.id = "egs",
                                              .description = "Gessel-Stanton type summation (zero for odd n)",
                                              .free_params = {"a", "b", "d"},
                                              .solved_params = {"c", "e"},
                                              .n_max = 6,
                                              .rhs_vanishes = [](int n) { return n % 2 == 1; }}));
  out.push_back(make_identity<Mixed3EvenSumEA>({.id = "cor_etrafo4_ea",
                                                .description = "q/q^3 summation with (q^-n;q)_2k at e = a",
                                                .free_params = {"a", "b"},
                                                .solved_params = {"c", "d"},
                                                .n_max = 6}));
  out.push_back(make_identity<Mixed3EvenSumC2>({.id = "c2",
                                                .description = "q/q^3 summation with b = aq^(n+1) (zero for n = 2 mod 3)",
                                                .free_params = {"a", "c"},
                                                .solved_params = {"b", "d"},
                                                .n_max = 6,
                                                .rhs_vanishes = [](int n) { return mod3_is(n, 2); }}));
  out.push_back(make_identity<Mixed3SumEA>({.id = "cor_etrafo5_ea",
                                            .description = "q/q^3 summation at e = a, three residue classes",
                                            .free_params = {"a", "b"},
                                            .solved_params = {"d", "c"},
                                            .n_max = 6}));
  out.push_back(make_identity<Mixed3SumChu>({.id = "cor_chu",
                                             .description = "Chu type summation (zero unless n = 0 mod 3)",
                                             .free_params = {"a", "b"},
                                             .solved_params = {"c", "d"},
                                             .n_max = 6,
                                             .rhs_vanishes = [](int n) { return !mod3_is(n, 0); }}));
  out.push_back(make_identity<Mixed3SumDA>({.id = "cor_etrafo5_da",
                                            .description = "q/q^3 summation at d = a (zero for n = 1 mod 3)",
                                            .free_params = {"a", "b"},
                                            .solved_params = {"c", "d"},
                                            .n_max = 6,
                                            .rhs_vanishes = [](int n) { return mod3_is(n, 1); }}));
  out.push_back(make_identity<QuarticTransform>({.id = "quartic_trafo",
                                                 .description = "quartic transformation to a series in base q^4",
                                                 .free_params = {"a", "b"},
                                                 .n_max = 2}));
  out.push_back(make_identity<QuarticSum>({.id = "quartic_sum",
                                           .description = "quartic summation (zero unless n = 0 mod 4)",
                                           .free_params = {"a"},
                                           .n_max = 8,
                                           .rhs_vanishes = [](int n) { return n % 4 != 0; }}));
}

}  // namespace ellhyp::catalog
