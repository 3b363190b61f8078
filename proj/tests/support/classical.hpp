#pragma once

// Classical (p = 0) q-series written out with plain (1 - x) factors, and a
// cofactor-expansion determinant. None of this calls into the library, so it
// can serve as an oracle for the elliptic code at p = 0.

#include <complex>
#include <cstddef>
#include <vector>

namespace classical {

using cd = std::complex<double>;

inline cd qpow(cd q, int k) {
  cd out(1);
  if (k >= 0)
    for (int i = 0; i < k; ++i) out *= q;
  else
    for (int i = 0; i < -k; ++i) out /= q;
  return out;
}

/// (a;q)_n, n >= 0.
inline cd poch(cd a, cd q, int n) {
  cd out(1), t = a;
  for (int k = 0; k < n; ++k, t *= q) out *= cd(1) - t;
  return out;
}

/// Terminating very-well-poised r+1 W r (a; params; q, q). `params` lists
/// every upper parameter after a, including q^{-n}.
inline cd very_well_poised(cd a, const std::vector<cd>& params, cd q, int n) {
  cd sum(0);
  for (int k = 0; k <= n; ++k) {
    cd t = (cd(1) - a * qpow(q, 2 * k)) / (cd(1) - a) * poch(a, q, k) / poch(q, q, k) * qpow(q, k);
    for (const cd& b : params) t *= poch(b, q, k) / poch(a * q / b, q, k);
    sum += t;
  }
  return sum;
}

/// Jackson's 8W7 with e fixed by a^2 q^{n+1} = bcde; returns (sum, product).
inline std::pair<cd, cd> jackson(cd a, cd b, cd c, cd d, cd q, int n) {
  const cd e = a * a * qpow(q, n + 1) / (b * c * d);
  const cd lhs = very_well_poised(a, {b, c, d, e, qpow(q, -n)}, q, n);
  const cd rhs = poch(a * q, q, n) * poch(a * q / (b * c), q, n) * poch(a * q / (b * d), q, n) *
                 poch(a * q / (c * d), q, n) /
                 (poch(a * q / b, q, n) * poch(a * q / c, q, n) * poch(a * q / d, q, n) * poch(a * q / (b * c * d), q, n));
  return {lhs, rhs};
}

/// Bailey's 10W9 transformation with g fixed by a^3 q^{n+2} = bcdefg;
/// returns (left series, right side).
inline std::pair<cd, cd> bailey(cd a, cd b, cd c, cd d, cd e, cd f, cd q, int n) {
  const cd g = a * a * a * qpow(q, n + 2) / (b * c * d * e * f);
  const cd lam = q * a * a / (b * c * d);
  const cd qn = qpow(q, -n);
  const cd lhs = very_well_poised(a, {b, c, d, e, f, g, qn}, q, n);
  const cd pre = poch(a * q, q, n) * poch(a * q / (e * f), q, n) * poch(lam * q / e, q, n) * poch(lam * q / f, q, n) /
                 (poch(a * q / e, q, n) * poch(a * q / f, q, n) * poch(lam * q / (e * f), q, n) * poch(lam * q, q, n));
  const cd rhs = pre * very_well_poised(lam, {lam * b / a, lam * c / a, lam * d / a, e, f, g, qn}, q, n);
  return {lhs, rhs};
}

/// Determinant by cofactor expansion along the first row; O(n!).
inline cd cofactor_det(const std::vector<std::vector<cd>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return cd(1);
  if (n == 1) return m[0][0];
  cd det(0);
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<std::vector<cd>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<cd> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != col) row.push_back(m[i][j]);
      minor.push_back(row);
    }
    det += (col % 2 ? -1.0 : 1.0) * m[0][col] * cofactor_det(minor);
  }
  return det;
}

inline double rel(cd a, cd b) { return std::abs(a - b) / (std::abs(a) + std::abs(b) + 1e-300); }

}  // namespace classical
