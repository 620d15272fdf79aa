// Test-only oracles, independent of the library implementation paths they
// check.
#pragma once

#include <numeric>
#include <vector>

#include "ksl/int.hpp"
#include "ksl/intpoly.hpp"

namespace oracles {

// Ordinary signature of the positive torus knot T_{A,B} by lattice-point
// counting: each (i,j) with 1 <= i < A, 1 <= j < B contributes -1 when
// 1/2 < i/A + j/B < 3/2 and +1 otherwise.
inline long torus_signature_count(long A, long B) {
  long s = 0;
  for (long i = 1; i < A; ++i)
    for (long j = 1; j < B; ++j) {
      const long v = 2 * (i * B + j * A);
      s += (v > A * B && v < 3 * A * B) ? -1 : 1;
    }
  return s;
}

// Fraction-free Bareiss determinant over Z[t].
inline ksl::IntPoly poly_det(std::vector<std::vector<ksl::IntPoly>> m) {
  const std::size_t n = m.size();
  ksl::IntPoly prev = ksl::IntPoly::constant(1);
  int sgn = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k].is_zero()) ++piv;
      if (piv == n) return ksl::IntPoly::zero();
      std::swap(m[k], m[piv]);
      sgn = -sgn;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exact_div(prev);
    prev = m[k][k];
  }
  ksl::IntPoly d = m[n - 1][n - 1];
  return sgn == 1 ? d : -d;
}

// det(tV - V^T) for an integer Seifert matrix V.
inline ksl::IntPoly seifert_alexander_det(const std::vector<std::vector<int>>& v) {
  const std::size_t n = v.size();
  std::vector<std::vector<ksl::IntPoly>> m(n, std::vector<ksl::IntPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i][j] = ksl::IntPoly{static_cast<long>(-v[j][i]), static_cast<long>(v[i][j])};
  return poly_det(std::move(m));
}

// t^g * Delta_{T_{A,B}} as an ordinary polynomial, straight from the defining
// rational function.
inline ksl::IntPoly torus_alexander_shifted(long A, long B) {
  using ksl::IntPoly;
  IntPoly num = IntPoly::xpow_minus_one(static_cast<std::size_t>(A * B)) *
                IntPoly::xpow_minus_one(1);
  IntPoly den = IntPoly::xpow_minus_one(static_cast<std::size_t>(A)) *
                IntPoly::xpow_minus_one(static_cast<std::size_t>(B));
  return num.exact_div(den);
}

}  // namespace oracles
