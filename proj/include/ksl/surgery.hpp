#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ksl/int.hpp"
#include "ksl/torus_knot.hpp"

namespace ksl {

struct DivisionByZeroSlope : std::domain_error {
  DivisionByZeroSlope() : std::domain_error("slope 0 has no Casson-Walker correction") {}
};

struct UnsupportedSlope : std::domain_error {
  explicit UnsupportedSlope(const std::string& what) : std::domain_error(what) {}
};

/// Surgery slope p/q in lowest terms with q >= 1.
class Slope {
 public:
  Slope(Int p, Int q) {
    if (q == 0) throw std::invalid_argument("slope denominator must be nonzero");
    if (q < 0) {
      p = -p;
      q = -q;
    }
    const Int g = gcd(iabs(p), q);
    if (g > 1) {
      p = exact_div(p, g);
      q = exact_div(q, g);
    }
    p_ = std::move(p);
    q_ = std::move(q);
  }

  explicit Slope(Int p) : Slope(std::move(p), Int(1)) {}
  Slope(long p, long q) : Slope(Int(p), Int(q)) {}

  const Int& p() const { return p_; }
  const Int& q() const { return q_; }
  bool is_integral() const { return q_ == 1; }

  friend bool operator==(const Slope& a, const Slope& b) { return a.p_ == b.p_ && a.q_ == b.q_; }

  std::string to_string() const {
    return q_ == 1 ? p_.get_str() : p_.get_str() + "/" + q_.get_str();
  }

 private:
  Int p_, q_;
};

/// Lens space L(p, q), normalized to 0 <= q < p with gcd(q, p) = 1.
/// L(1, 0) denotes the 3-sphere.
class LensSpace {
 public:
  LensSpace(Int order, const Int& param) {
    if (order < 1) throw std::invalid_argument("lens space order must be positive");
    q_ = mod_floor(param, order);
    p_ = std::move(order);
    if (p_ > 1 && gcd(q_, p_) != 1)
      throw std::invalid_argument("lens space parameter must be a unit mod the order");
  }

  const Int& order() const { return p_; }
  const Int& param() const { return q_; }
  bool is_sphere() const { return p_ == 1; }

  friend bool operator==(const LensSpace& a, const LensSpace& b) {
    return a.p_ == b.p_ && a.q_ == b.q_;
  }
  friend bool operator!=(const LensSpace& a, const LensSpace& b) { return !(a == b); }

  std::string to_string() const {
    if (is_sphere()) return "S3";
    return "L(" + p_.get_str() + "," + q_.get_str() + ")";
  }

 private:
  Int p_, q_;
};

/// Oriented homeomorphism test: equal orders and q1 = q2 or q1*q2 = 1 mod p.
/// The classical classification; shared lens surgeries in the pair family land
/// in the inverse branch via b^2 d^2 = 1 (mod p).
inline bool lens_homeo_oriented(const LensSpace& l1, const LensSpace& l2) {
  if (l1.order() != l2.order()) return false;
  if (l1.param() == l2.param()) return true;
  return mod_floor(l1.param() * l2.param(), l1.order()) == 1;
}

enum class SurgeryKind { Lens, ConnectedSumOfLens, SmallSeifert, ZeroFilling };

/// Moser trichotomy outcome for a torus-knot surgery.  For integral slopes
/// ab +- 1 the lens parameters are known exactly; for fractional lens slopes
/// only the order |p| is recorded.
struct SurgeryClass {
  SurgeryKind kind;
  std::optional<LensSpace> lens;  // set when kind == Lens and the slope is integral
  Int lens_order;                 // set when kind == Lens
  Int sum_order_a, sum_order_b;   // set when kind == ConnectedSumOfLens

  static SurgeryClass zero_filling() { return {SurgeryKind::ZeroFilling, std::nullopt, 0, 0, 0}; }
  static SurgeryClass small_seifert() { return {SurgeryKind::SmallSeifert, std::nullopt, 0, 0, 0}; }
  static SurgeryClass connected_sum(Int a, Int b) {
    return {SurgeryKind::ConnectedSumOfLens, std::nullopt, 0, std::move(a), std::move(b)};
  }
  static SurgeryClass lens_with(LensSpace l) {
    Int order = l.order();
    return {SurgeryKind::Lens, std::move(l), std::move(order), 0, 0};
  }
  static SurgeryClass lens_order_only(Int order) {
    return {SurgeryKind::Lens, std::nullopt, std::move(order), 0, 0};
  }

  std::string to_string() const {
    switch (kind) {
      case SurgeryKind::ZeroFilling:
        return "ZeroFilling";
      case SurgeryKind::SmallSeifert:
        return "SmallSeifert";
      case SurgeryKind::ConnectedSumOfLens:
        return "L(" + sum_order_a.get_str() + ",·)#L(" + sum_order_b.get_str() + ",·)";
      case SurgeryKind::Lens:
        if (lens) return lens->to_string();
        return "L(" + lens_order.get_str() + ",·)";
    }
    return "";
  }
};

/// Moser classification of p/q surgery on a nontrivial torus knot T_{a,b}:
/// reducible (two lens summands of orders A and B) exactly at slope ab, a lens
/// space when |p - q*ab| = 1, and small Seifert fibered otherwise.  Integral
/// slopes ab +- 1 give L(|p|, B^2 mod |p|).
inline SurgeryClass classify_torus_surgery(const TorusKnot& t, const Slope& r) {
  if (t.is_trivial())
    throw std::invalid_argument("classify_torus_surgery: knot must be nontrivial");
  if (r.p() == 0) return SurgeryClass::zero_filling();
  const Int ab = t.a() * t.b();
  const Int dist = iabs(r.p() - r.q() * ab);
  if (dist == 0) return SurgeryClass::connected_sum(t.A(), t.B());
  if (dist == 1) {
    Int order = iabs(r.p());
    if (r.is_integral()) return SurgeryClass::lens_with(LensSpace(order, t.B() * t.B()));
    return SurgeryClass::lens_order_only(std::move(order));
  }
  return SurgeryClass::small_seifert();
}

/// Casson-Walker surgery correction (1/r) * Delta''(1)/2 = q*ddHalf/p.
inline Rat casson_correction(const Int& dd_half, const Slope& r) {
  if (r.p() == 0) throw DivisionByZeroSlope();
  return make_rat(r.q() * dd_half, r.p());
}

enum class ZeroSurgeryVerdict { Same, AlexanderDistinct, SignatureDistinct };

inline std::string to_string(ZeroSurgeryVerdict v) {
  switch (v) {
    case ZeroSurgeryVerdict::Same:
      return "Same";
    case ZeroSurgeryVerdict::AlexanderDistinct:
      return "AlexanderDistinct";
    case ZeroSurgeryVerdict::SignatureDistinct:
      return "SignatureDistinct";
  }
  return "";
}

/// Zero-surgery comparison of nontrivial torus knots: the Alexander polynomial
/// recovers {A,B}, and the signature sign separates a knot from its mirror, so
/// distinct knots are always distinguished.
inline ZeroSurgeryVerdict zero_surgery_torus_compare(const TorusKnot& t1, const TorusKnot& t2) {
  if (t1.is_trivial() || t2.is_trivial())
    throw std::invalid_argument("zero_surgery_torus_compare: knots must be nontrivial");
  if (t1.alexander() != t2.alexander()) return ZeroSurgeryVerdict::AlexanderDistinct;
  if (t1.signature() != t2.signature()) return ZeroSurgeryVerdict::SignatureDistinct;
  return ZeroSurgeryVerdict::Same;
}

/// Satellite formula Delta''_K(1) = Delta''_{P(U)}(1) + w^2 Delta''_C(1)
/// (valid verbatim for the halved values).
inline Int satellite_delta_dd(const Int& dd_pattern, const Int& dd_companion, const Int& w) {
  if (w < 0) throw std::invalid_argument("winding number must be nonnegative");
  return dd_pattern + w * w * dd_companion;
}

/// H_1 of 0-surgery on a winding-number-w pattern in the solid torus:
/// Z + Z/w.  torsion_order 0 stands for an extra free factor (w = 0), and the
/// result embeds in the 3-sphere only when w = 1.
struct PatternZeroHomology {
  Int free_rank;
  Int torsion_order;
  bool embeddable;
};

inline PatternZeroHomology pattern_zero_surgery_homology(const Int& w) {
  if (w < 0) throw std::invalid_argument("winding number must be nonnegative");
  if (w == 0) return {Int(2), Int(0), false};
  return {Int(1), w, w == 1};
}

/// Shinohara's cable signature: sigma(T_{p,q}) for even q, plus the companion
/// signature for odd q.
inline Int cable_signature(const Int& sigma_torus, const Int& sigma_companion, const Int& q) {
  if (q < 2) throw std::invalid_argument("cable winding must be >= 2");
  return mod_floor(q, Int(2)) == 0 ? sigma_torus : Int(sigma_torus + sigma_companion);
}

struct SatelliteParams {
  long long pattern_genus;    // h = g(P(U))
  long long companion_genus;  // k = g(C)
  long long winding;          // w
};

/// Search for satellite decompositions g = h + w*k (h,k >= 1, w >= 2) that
/// survive all three constraints forced on an L-space satellite whose
/// Alexander polynomial matches the extremal genus-g staircase:
///   (i)  h(h+1) + w^2 k(k+1) >= g(g+1)   (second-derivative bound)
///   (ii) w = 2h+1                        (full coefficient support)
///   (iii) w(2k-1) < (2h-1+w)/(w-1)       (constraint on L-space cables)
/// No triple survives, for any g; a nonempty result is a counterexample.
inline std::vector<SatelliteParams> satellite_lspace_exclusion(long long g) {
  if (g < 1) throw std::invalid_argument("genus must be >= 1");
  std::vector<SatelliteParams> out;
  for (long long h = 1; h + 2 <= g; ++h)
    for (long long w = 2; ; ++w) {
      if (h + w > g) break;
      if ((g - h) % w != 0) continue;
      const long long k = (g - h) / w;
      if (k < 1) break;
      const Int lhs = to_int(h) * to_int(h + 1) + to_int(w) * to_int(w) * to_int(k) * to_int(k + 1);
      if (lhs < to_int(g) * to_int(g + 1)) continue;  // (i)
      if (w != 2 * h + 1) continue;                   // (ii)
      if (to_int(w) * to_int(2 * k - 1) * to_int(w - 1) >= to_int(2 * h - 1 + w))
        continue;  // (iii) fails
      out.push_back({h, k, w});
    }
  return out;
}

}  // namespace ksl
