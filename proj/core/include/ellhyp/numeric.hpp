#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <concepts>
#include <limits>
#include <sstream>
#include <string>

namespace ellhyp {

template <std::floating_point R>
using Complex = std::complex<R>;

/// Working precisions. `Extended` maps to `long double` (64-bit mantissa on
/// x86-64) and is combined with compensated accumulation.
enum class Precision { Double, Extended };

inline std::string to_string(Precision prec) {
  return prec == Precision::Double ? "double" : "extended";
}

template <std::floating_point R>
bool is_finite(const Complex<R>& z) noexcept {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// z^k for integer k by repeated squaring. Exact 1 for k == 0, which the
/// structural-zero handling of q-power Pochhammers relies on.
template <std::floating_point R>
Complex<R> ipow(Complex<R> z, long long k) {
  if (k < 0) return Complex<R>(1) / ipow(z, -k);
  Complex<R> result(1);
  while (k > 0) {
    if (k & 1) result *= z;
    z *= z;
    k >>= 1;
  }
  return result;
}

/// Neumaier-compensated complex sum that also tracks sum |term|, the scale
/// used for conditioning estimates and zero tests.
template <std::floating_point R>
class SumAccumulator {
 public:
  void add(const Complex<R>& term) {
    add_component(re_, re_comp_, term.real());
    add_component(im_, im_comp_, term.imag());
    abs_sum_ += std::abs(term);
    max_abs_ = std::max(max_abs_, std::abs(term));
    ++count_;
  }

  Complex<R> value() const { return {re_ + re_comp_, im_ + im_comp_}; }
  R abs_sum() const { return abs_sum_; }
  R max_abs() const { return max_abs_; }
  std::size_t count() const { return count_; }

  /// sum|t| / |sum t|; infinity when the sum cancels to zero.
  R condition() const {
    const R v = std::abs(value());
    if (v == R(0)) return abs_sum_ == R(0) ? R(1) : std::numeric_limits<R>::infinity();
    return abs_sum_ / v;
  }

 private:
  static void add_component(R& sum, R& comp, R x) {
    const R t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }

  R re_{0}, im_{0}, re_comp_{0}, im_comp_{0};
  R abs_sum_{0}, max_abs_{0};
  std::size_t count_{0};
};

/// Complex product kept as mantissa * 2^exponent, for long chains of
/// factors whose partial products leave the range of R even when the final
/// value does not.
template <std::floating_point R>
class ScaledProduct {
 public:
  ScaledProduct() = default;
  explicit ScaledProduct(Complex<R> z) : mant_(z) { normalize(); }

  ScaledProduct& operator*=(Complex<R> z) {
    mant_ *= z;
    normalize();
    return *this;
  }
  ScaledProduct& operator/=(Complex<R> z) {
    mant_ /= z;
    normalize();
    return *this;
  }
  ScaledProduct& operator*=(const ScaledProduct& o) {
    mant_ *= o.mant_;
    exp_ += o.exp_;
    normalize();
    return *this;
  }
  ScaledProduct& operator/=(const ScaledProduct& o) {
    mant_ /= o.mant_;
    exp_ -= o.exp_;
    normalize();
    return *this;
  }
  friend ScaledProduct operator*(ScaledProduct a, const ScaledProduct& b) { return a *= b; }
  friend ScaledProduct operator/(ScaledProduct a, const ScaledProduct& b) { return a /= b; }
  friend ScaledProduct operator*(ScaledProduct a, Complex<R> b) { return a *= b; }

  /// Rounds to R; overflows to inf and underflows to 0 only here.
  Complex<R> value() const {
    const int e = static_cast<int>(std::clamp<long long>(exp_, -100000, 100000));
    return {std::ldexp(mant_.real(), e), std::ldexp(mant_.imag(), e)};
  }

 private:
  void normalize() {
    const R m = std::max(std::abs(mant_.real()), std::abs(mant_.imag()));
    if (m == R(0) || !std::isfinite(m)) return;
    int e = 0;
    std::frexp(m, &e);
    mant_ = {std::ldexp(mant_.real(), -e), std::ldexp(mant_.imag(), -e)};
    exp_ += e;
  }

  Complex<R> mant_{1};
  long long exp_ = 0;
};

/// |a - b| / (|a| + |b| + tiny): symmetric and meaningful near zero.
template <std::floating_point R>
R relative_error(const Complex<R>& a, const Complex<R>& b) {
  return std::abs(a - b) / (std::abs(a) + std::abs(b) + R(1e-300));
}

template <std::floating_point R>
std::string format_complex(const Complex<R>& z) {
  std::ostringstream os;
  os.precision(17);
  os << '(' << static_cast<double>(z.real()) << ',' << static_cast<double>(z.imag()) << ')';
  return os.str();
}

}  // namespace ellhyp
