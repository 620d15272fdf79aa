#pragma once

#include <stdexcept>
#include <vector>

#include "ksl/intpoly.hpp"

namespace ksl {

/// Moebius function of n >= 1 by trial factorization.
inline int moebius(long long n) {
  if (n < 1) throw std::invalid_argument("moebius of nonpositive argument");
  int factors = 0;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      ++factors;
    }
  }
  if (n > 1) ++factors;
  return factors % 2 == 0 ? 1 : -1;
}

/// N-th cyclotomic polynomial via Phi_N = prod_{d|N} (x^{N/d} - 1)^{mu(d)}.
inline IntPoly cyclotomic(long long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic index must be positive");
  IntPoly num = IntPoly::constant(1);
  IntPoly den = IntPoly::constant(1);
  for (long long d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    const int mu = moebius(d);
    if (mu == 1)
      num = num * IntPoly::xpow_minus_one(static_cast<std::size_t>(n / d));
    else if (mu == -1)
      den = den * IntPoly::xpow_minus_one(static_cast<std::size_t>(n / d));
  }
  return num.exact_div(den);
}

}  // namespace ksl
