#pragma once

// Shared plumbing for catalog entries. Left sides are summed term by term
// with Pochhammer symbols assembled here from single E evaluations; right
// sides go through the kernel's pochhammer_e / eval_omega. The two paths
// never share intermediate values.

#include <initializer_list>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ellhyp/catalog.hpp"
#include "ellhyp/kernel.hpp"
#include "ellhyp/series.hpp"

namespace ellhyp::catalog {

template <std::floating_point R>
using C = Complex<R>;

template <std::floating_point R>
struct Point {
  Nome<R> nome;
  int n = 0;
  std::map<std::string, C<R>> v;

  C<R> operator()(const std::string& name) const {
    const auto it = v.find(name);
    if (it == v.end()) throw Error(ErrorKind::InvalidArgument, "parameter '" + name + "' missing from point");
    return it->second;
  }
  C<R> q() const { return nome.q; }
  C<R> p() const { return nome.p; }
  Nome<R> base(int power) const { return nome.power_base(power); }
};

template <std::floating_point R>
Point<R> load(const ParamPoint& pp, const std::vector<std::string>& free_params) {
  Point<R> pt;
  pt.nome = {C<R>(pp.nome.q), C<R>(pp.nome.p)};
  pt.n = pp.integer("n");
  for (const auto& name : free_params) pt.v[name] = C<R>(pp.at(name));
  return pt;
}

/// Pairs (lhs, rhs) of constraint equations, for residual checks.
template <std::floating_point R>
using Constraints = std::vector<std::pair<C<R>, C<R>>>;

// ---- left-side building blocks ----

/// Products of many E factors can leave the working range long before the
/// summand itself does; such points are redrawn rather than evaluated.
template <std::floating_point R>
C<R> in_range(C<R> z, const char* what) {
  const R m = std::abs(z);
  if (!(m >= std::numeric_limits<R>::min() && m <= std::numeric_limits<R>::max()))
    throw Error(ErrorKind::SingularToWorkingPrecision, std::string(what) + " leaves the working range");
  return z;
}

/// prod_{j<len} E(a base^j) for len >= 0, straight from eval_E.
template <std::floating_point R>
C<R> lhs_poch(C<R> a, C<R> base, C<R> p, int len) {
  C<R> out(1), shift(1);
  for (int j = 0; j < len; ++j, shift *= base) out *= eval_E(a * shift, p);
  return in_range(out, "left-side Pochhammer");
}

template <std::floating_point R>
C<R> lhs_poch_den(C<R> a, C<R> base, C<R> p, int len) {
  C<R> out(1), shift(1);
  for (int j = 0; j < len; ++j, shift *= base) out *= eval_E_denominator(a * shift, p, "left-side denominator");
  return in_range(out, "left-side denominator");
}

/// (a_1,...;base)_len / (b_1,...;base)_len on the left-side path.
template <std::floating_point R>
C<R> lhs_ratio(std::initializer_list<C<R>> num, std::initializer_list<C<R>> den, C<R> base, C<R> p, int len) {
  C<R> top(1), bottom(1);
  for (const auto& a : num) top *= lhs_poch(a, base, p, len);
  for (const auto& b : den) bottom *= lhs_poch_den(b, base, p, len);
  return in_range(in_range(top, "left-side numerator") / in_range(bottom, "left-side denominator"), "left-side ratio");
}

/// E(a base^k)/E(a) on the left-side path.
template <std::floating_point R>
C<R> lhs_vwp(C<R> a, C<R> factor, C<R> p) {
  return eval_E(a * factor, p) / eval_E_denominator(a, p, "very-well-poised factor");
}

template <std::floating_point R>
struct LhsSum {
  SumAccumulator<R> acc;

  void add(C<R> term) { acc.add(in_range(term, "left-side summand")); }

  IdentityValue<R> finish(C<R> rhs) const {
    IdentityValue<R> out;
    out.lhs = acc.value();
    out.rhs = rhs;
    out.lhs_max_term = acc.max_abs();
    out.lhs_condition = acc.condition();
    return out;
  }
};

// ---- right-side building blocks (kernel path) ----

template <std::floating_point R>
C<R> rhs_ratio(std::initializer_list<C<R>> num, std::initializer_list<C<R>> den, const Nome<R>& nome, int len) {
  C<R> top(1), bottom(1);
  for (const auto& a : num) top *= pochhammer_e(a, nome, len);
  for (const auto& b : den) bottom *= pochhammer_e_denominator(b, nome, len);
  return in_range(in_range(top, "right-side numerator") / in_range(bottom, "right-side denominator"), "right-side ratio");
}

template <std::floating_point R>
C<R> rhs_E_ratio(std::initializer_list<C<R>> num, std::initializer_list<C<R>> den, C<R> p) {
  C<R> top(1), bottom(1);
  for (const auto& a : num) top *= eval_E(a, p);
  for (const auto& b : den) bottom *= eval_E_denominator(b, p, "right-side prefactor");
  return top / bottom;
}

/// Terminating omega series whose upper list contains several candidate
/// terminators; the entry at `drop` is removed and n_term supplies it.
template <std::floating_point R>
C<R> omega_dropping(C<R> a1, std::vector<C<R>> upper, std::size_t drop, const Nome<R>& nome, int n_term) {
  upper.erase(upper.begin() + static_cast<std::ptrdiff_t>(drop));
  return eval_omega(OmegaSpec<R>{a1, std::move(upper), nome, n_term});
}

}  // namespace ellhyp::catalog

namespace ellhyp::catalog {

/// Terminating very-well-poised sum on the left-side path; `upper` already
/// contains the terminator, n_term bounds the sum.
template <std::floating_point R>
LhsSum<R> lhs_omega(C<R> a1, const std::vector<C<R>>& upper, C<R> base, C<R> p, int n_term) {
  LhsSum<R> sum;
  for (int k = 0; k <= n_term; ++k) {
    C<R> t = lhs_vwp(a1, ipow(base, 2 * k), p) * lhs_poch(a1, base, p, k) / lhs_poch_den(base, base, p, k) * ipow(base, k);
    for (const auto& u : upper) t *= lhs_poch(u, base, p, k) / lhs_poch_den(a1 * base / u, base, p, k);
    sum.add(t);
  }
  return sum;
}

template <std::floating_point R>
R constraint_residual(const Constraints<R>& eqs) {
  R worst(0);
  for (const auto& [lhs, rhs] : eqs) worst = std::max(worst, relative_error(lhs, rhs));
  return worst;
}

/// Wires an entry type providing solve/eval/constraints into an Identity.
template <class Entry>
Identity make_identity(Identity meta) {
  const auto free = meta.free_params;
  const auto solved = meta.solved_params;
  meta.solve = [free, solved](ParamPoint& pp) {
    auto pt = load<double>(pp, free);
    Entry::solve(pt);
    for (const auto& name : solved) pp.values[name] = pt(name);
  };
  meta.eval_double = [free](const ParamPoint& pp) {
    auto pt = load<double>(pp, free);
    Entry::solve(pt);
    return Entry::eval(pt);
  };
  meta.eval_extended = [free](const ParamPoint& pp) {
    auto pt = load<long double>(pp, free);
    Entry::solve(pt);
    return Entry::eval(pt);
  };
  meta.constraint_residual = [free](const ParamPoint& pp) {
    auto pt = load<double>(pp, free);
    Entry::solve(pt);
    return static_cast<double>(constraint_residual(Entry::constraints(pt)));
  };
  return meta;
}

void register_basic(std::vector<Identity>& out);
void register_quadratic_cubic(std::vector<Identity>& out);
void register_higher(std::vector<Identity>& out);

}  // namespace ellhyp::catalog
