#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ksl {

/// Arbitrary-precision integer (GMP-backed).
using Int = mpz_class;

/// Exact rational, reduced, denominator > 0 (GMP-backed).
using Rat = mpq_class;

/// mpz from a 64-bit value (gmpxx has no long long constructor).
inline Int to_int(long long v) { return Int(static_cast<long>(v)); }

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int iabs(const Int& a) { return a < 0 ? Int(-a) : a; }

inline int sign(const Int& a) { return mpz_sgn(a.get_mpz_t()); }

/// Quotient of an exact integer division; throws if b does not divide a.
inline Int exact_div(const Int& a, const Int& b,
                     const char* what = "integer division is not exact") {
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r != 0) throw std::domain_error(what);
  return q;
}

/// a mod m, reduced into [0, m). Requires m > 0.
inline Int mod_floor(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// Fibonacci number F(l) for l >= -2, with F(-2) = -1, F(-1) = 1, F(0) = 0.
inline Int fibonacci(long l) {
  if (l >= 0) {
    Int f;
    mpz_fib_ui(f.get_mpz_t(), static_cast<unsigned long>(l));
    return f;
  }
  if (l == -1) return Int(1);
  if (l == -2) return Int(-1);
  throw std::invalid_argument("fibonacci index below -2");
}

}  // namespace ksl
