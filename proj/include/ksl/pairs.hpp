#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ksl/int.hpp"
#include "ksl/intpoly.hpp"
#include "ksl/staircase.hpp"
#include "ksl/surgery.hpp"
#include "ksl/torus_knot.hpp"

namespace ksl {

struct DegenerateInstance : std::domain_error {
  explicit DegenerateInstance(const std::string& what) : std::domain_error(what) {}
};

/// Level k of the recursively defined sextuple (a,b,c,d,p,q) in Z[n].  For
/// k >= 0 the defining identities are a*b + 1 = p = c*d - 1 and
/// b^2 d^2 = p*q + 1, with all six monic of degrees k, k+1, k, k+1, 2k+1,
/// 2k+3.
struct PairFamilyState {
  long k = -1;
  IntPoly a, b, c, d, p, q;
};

/// The defining base sextuple (-1, 1, 1, 1, 0, n+1) at level k = -1.
inline PairFamilyState initial_state() {
  PairFamilyState s;
  s.k = -1;
  s.a = IntPoly{-1};
  s.b = IntPoly{1};
  s.c = IntPoly{1};
  s.d = IntPoly{1};
  s.p = IntPoly::zero();
  s.q = IntPoly{1, 1};  // n + 1
  return s;
}

inline bool operator==(const PairFamilyState& x, const PairFamilyState& y) {
  return x.k == y.k && x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d && x.p == y.p &&
         x.q == y.q;
}

/// Throws unless the level-k invariants hold.
inline void check_state_invariants(const PairFamilyState& s) {
  auto fail = [&](const std::string& what) {
    throw std::logic_error("pair family level " + std::to_string(s.k) + ": " + what);
  };
  if (s.k == -1) {
    if (!(s == initial_state())) fail("base sextuple mismatch");
    return;
  }
  if (s.k < -1) fail("level below -1");
  const IntPoly one = IntPoly::constant(1);
  if (s.a * s.b + one != s.p) fail("a*b + 1 != p");
  if (s.c * s.d - one != s.p) fail("c*d - 1 != p");
  if (s.b * s.b * s.d * s.d != s.p * s.q + one) fail("b^2 d^2 != p*q + 1");
  const std::size_t k = static_cast<std::size_t>(s.k);
  auto check_poly = [&](const IntPoly& f, std::size_t deg, const char* name) {
    if (!f.degree() || *f.degree() != deg || !f.is_monic())
      fail(std::string(name) + " is not monic of the right degree");
  };
  check_poly(s.a, k, "a");
  check_poly(s.b, k + 1, "b");
  check_poly(s.c, k, "c");
  check_poly(s.d, k + 1, "d");
  check_poly(s.p, 2 * k + 1, "p");
  check_poly(s.q, 2 * k + 3, "q");
}

/// One step of the recursion
///   (a,b,c,d) <- (d, (q-1)/d, b, (q+1)/b),  (p,q) <- (q, (b'^2 d'^2 - 1)/q).
/// Every division is exact in Z[n]; a NonExactDivision here would falsify the
/// integrality of the family.
inline PairFamilyState step(const PairFamilyState& s) {
  const IntPoly one = IntPoly::constant(1);
  PairFamilyState next;
  next.k = s.k + 1;
  next.a = s.d;
  next.b = (s.q - one).exact_div(s.d);
  next.c = s.b;
  next.d = (s.q + one).exact_div(s.b);
  next.p = s.q;
  next.q = (next.b * next.b * next.d * next.d - one).exact_div(s.q);
  return next;
}

/// Levels -1..k_max, each invariant-checked.
inline std::vector<PairFamilyState> generate(long k_max) {
  if (k_max < -1) throw std::invalid_argument("generate: k_max must be >= -1");
  std::vector<PairFamilyState> out;
  PairFamilyState s = initial_state();
  check_state_invariants(s);
  out.push_back(s);
  for (long k = 0; k <= k_max; ++k) {
    s = step(s);
    check_state_invariants(s);
    out.push_back(s);
  }
  return out;
}

/// A pair of torus knots sharing the integral surgery slope = p(n), with the
/// lens spaces both surgeries produce.
struct PairInstance {
  long k;
  Int n;
  TorusKnot knot1, knot2;
  Int slope;
  LensSpace lens1, lens2;
};

/// Evaluate a level-k state at an integer n, checking that both parameter
/// pairs give nontrivial coprime torus knots with a_k(n) != c_k(n) and
/// b_k(n) != d_k(n).  Throws DegenerateInstance otherwise (n = 1 collapses
/// both knots to unknots).
inline PairInstance instantiate(const PairFamilyState& s, const Int& n) {
  if (s.k < 1) throw std::invalid_argument("instantiate: requires level k >= 1");
  const Int av = s.a.eval(n), bv = s.b.eval(n), cv = s.c.eval(n), dv = s.d.eval(n);
  const Int pv = s.p.eval(n);
  auto degenerate = [&](const std::string& what) {
    throw DegenerateInstance("level " + std::to_string(s.k) + ", n = " + n.get_str() + ": " +
                             what);
  };
  if (av < 2 || bv < 2 || cv < 2 || dv < 2) degenerate("a torus knot parameter is below 2");
  if (gcd(av, bv) != 1 || gcd(cv, dv) != 1) degenerate("parameters are not coprime");
  if (av == cv || bv == dv) degenerate("the two knots coincide");
  if (pv != av * bv + 1 || pv != cv * dv - 1)
    throw std::logic_error("instantiate: slope identity failed");

  TorusKnot k1{av, bv}, k2{cv, dv};
  const Slope r{pv, Int(1)};
  const SurgeryClass c1 = classify_torus_surgery(k1, r);
  const SurgeryClass c2 = classify_torus_surgery(k2, r);
  if (c1.kind != SurgeryKind::Lens || !c1.lens || c2.kind != SurgeryKind::Lens || !c2.lens)
    throw std::logic_error("instantiate: surgeries did not classify as lens spaces");
  return PairInstance{s.k, n, std::move(k1), std::move(k2), pv, *c1.lens, *c2.lens};
}

struct PairCheck {
  std::string id;
  bool pass;
  std::string witness;
};

struct PairReport {
  std::vector<PairCheck> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// The five per-instance checks: the two lens spaces are oriented-homeomorphic,
/// the genera differ, Delta''(1)/2 agrees, both signatures are negative, and
/// the staircases differ.
inline PairReport verify_pair(const PairInstance& inst) {
  PairReport report;
  auto add = [&](const char* id, bool pass, std::string witness) {
    report.checks.push_back({id, pass, std::move(witness)});
  };

  add("lens-homeo", lens_homeo_oriented(inst.lens1, inst.lens2),
      inst.lens1.to_string() + " ~ " + inst.lens2.to_string());

  const Int g1 = inst.knot1.genus(), g2 = inst.knot2.genus();
  add("genus-differs", g1 != g2, g1.get_str() + " vs " + g2.get_str());

  const Int dd1 = inst.knot1.delta_dd_half(), dd2 = inst.knot2.delta_dd_half();
  add("casson-term-equal", dd1 == dd2, dd1.get_str() + " vs " + dd2.get_str());

  add("signatures-negative",
      inst.knot1.signature_sign() == -1 && inst.knot2.signature_sign() == -1,
      std::string("signs ") + std::to_string(inst.knot1.signature_sign()) + ", " +
          std::to_string(inst.knot2.signature_sign()));

  // Staircases of distinct-genus L-space knots differ already in length; the
  // witness records the leading exponents.
  const auto head1 = staircase_head(inst.knot1, 4);
  const auto head2 = staircase_head(inst.knot2, 4);
  const bool stairs_differ = g1 != g2 || head1 != head2;
  std::string w = "[";
  for (std::size_t i = 0; i < head1.size(); ++i) w += (i ? "," : "") + head1[i].get_str();
  w += ",...] vs [";
  for (std::size_t i = 0; i < head2.size(); ++i) w += (i ? "," : "") + head2[i].get_str();
  w += ",...]";
  add("staircases-differ", stairs_differ, std::move(w));
  return report;
}

/// At n = 2 the family is Fibonacci: (a,b) = (F_{2k}+F_{2k+2}, F_{2k+3}),
/// (c,d) = (F_{2k+1}, F_{2k+2}+F_{2k+4}), p = F_{4k+4}, q = F_{4k+8}.
inline bool fibonacci_specialization(long k) {
  if (k < -1) throw std::invalid_argument("level must be >= -1");
  PairFamilyState s = initial_state();
  for (long i = 0; i <= k; ++i) s = step(s);
  const Int n = 2;
  return s.a.eval(n) == fibonacci(2 * k) + fibonacci(2 * k + 2) &&
         s.b.eval(n) == fibonacci(2 * k + 3) && s.c.eval(n) == fibonacci(2 * k + 1) &&
         s.d.eval(n) == fibonacci(2 * k + 2) + fibonacci(2 * k + 4) &&
         s.p.eval(n) == fibonacci(4 * k + 4) && s.q.eval(n) == fibonacci(4 * k + 8);
}

/// At n = 1 the sextuple collapses to (2k+1, 1, 1, 2k+3, 2k+2, 2k+4).
inline bool n1_specialization(long k) {
  if (k < -1) throw std::invalid_argument("level must be >= -1");
  PairFamilyState s = initial_state();
  for (long i = 0; i <= k; ++i) s = step(s);
  const Int n = 1;
  return s.a.eval(n) == 2 * k + 1 && s.b.eval(n) == 1 && s.c.eval(n) == 1 &&
         s.d.eval(n) == 2 * k + 3 && s.p.eval(n) == 2 * k + 2 && s.q.eval(n) == 2 * k + 4;
}

}  // namespace ksl
