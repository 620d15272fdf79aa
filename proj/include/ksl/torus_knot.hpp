#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ksl/cyclotomic.hpp"
#include "ksl/int.hpp"
#include "ksl/intpoly.hpp"
#include "ksl/laurent.hpp"
#include "ksl/seifert.hpp"

namespace ksl {

/// The torus knot T_{a,b}, canonicalized so that 1 <= |a| <= b, gcd(|a|,b)=1,
/// with chirality carried by the sign of a.  Trivial knots (min parameter 1)
/// are stored with positive sign since the unknot is amphichiral.
class TorusKnot {
 public:
  TorusKnot(Int a, Int b) {
    if (a == 0 || b == 0) throw std::invalid_argument("torus knot parameters must be nonzero");
    const int s = sign(a) * sign(b);
    Int abs_a = iabs(a), abs_b = iabs(b);
    if (abs_a > abs_b) std::swap(abs_a, abs_b);
    if (gcd(abs_a, abs_b) != 1)
      throw std::invalid_argument("torus knot parameters must be coprime");
    a_ = (abs_a == 1 || s > 0) ? abs_a : Int(-abs_a);
    b_ = std::move(abs_b);
  }

  TorusKnot(long a, long b) : TorusKnot(Int(a), Int(b)) {}

  const Int& a() const { return a_; }
  const Int& b() const { return b_; }

  /// Absolute parameters A <= B.
  Int A() const { return iabs(a_); }
  const Int& B() const { return b_; }

  bool is_trivial() const { return A() == 1; }
  bool is_positive() const { return !is_trivial() && a_ > 0; }

  TorusKnot mirror() const {
    TorusKnot m = *this;
    if (!m.is_trivial()) m.a_ = -m.a_;
    return m;
  }

  friend bool operator==(const TorusKnot& x, const TorusKnot& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const TorusKnot& x, const TorusKnot& y) { return !(x == y); }

  /// Seifert genus (A-1)(B-1)/2.
  Int genus() const { return exact_div((A() - 1) * (B() - 1), Int(2)); }

  /// Delta''(1)/2 = (A^2-1)(B^2-1)/24, an exact integer.
  Int delta_dd_half() const {
    return exact_div((A() * A() - 1) * (B() * B() - 1), Int(24));
  }

  /// Symmetric Alexander polynomial
  ///   Delta(t) = t^{-g} (t^{AB}-1)(t-1) / ((t^A-1)(t^B-1)).
  LaurentPoly alexander() const {
    if (is_trivial()) return LaurentPoly::one();
    const Int ab = A() * B();
    if (ab > 2000000) throw std::domain_error("alexander: parameters too large");
    const auto av = static_cast<std::size_t>(A().get_si());
    const auto bv = static_cast<std::size_t>(B().get_si());
    IntPoly num = IntPoly::xpow_minus_one(av * bv) * IntPoly::xpow_minus_one(1);
    IntPoly den = IntPoly::xpow_minus_one(av) * IntPoly::xpow_minus_one(bv);
    IntPoly shifted = num.exact_div(den);  // t^g * Delta, degree 2g
    const long long g = static_cast<long long>((av - 1) * (bv - 1) / 2);
    LaurentPoly delta = shifted.to_laurent(-g);
    if (!delta.is_symmetric() || delta.eval_at_one() != 1)
      throw std::logic_error("alexander: normalization Delta(t) = Delta(1/t), Delta(1) = 1 failed");
    return delta;
  }

  /// Sign of the signature: -1 for positive nontrivial torus knots, +1 for
  /// negative ones, 0 for the unknot.  Exact for all parameter sizes.
  int signature_sign() const {
    if (is_trivial()) return 0;
    return a_ > 0 ? -1 : 1;
  }

  /// Exact signature of the symmetrized Seifert form of the braid-closure
  /// surface.  Practical for moderate genus; see seifert.hpp.
  Int signature() const {
    if (is_trivial()) return 0;
    if (!A().fits_slong_p() || !B().fits_slong_p())
      throw std::domain_error("signature: parameters too large");
    const long s = detail::positive_torus_signature(A().get_si(), B().get_si());
    return Int(a_ > 0 ? s : -s);
  }

  std::string to_string() const {
    std::ostringstream os;
    os << "T(" << a_.get_str() << "," << b_.get_str() << ")";
    return os.str();
  }

 private:
  Int a_, b_;
};

struct TorusRecognition {
  enum class Kind { Unknot, Torus, NotTorus };
  Kind kind = Kind::NotTorus;
  Int A, B;  // set when kind == Torus, with A < B

  static TorusRecognition unknot() { return {Kind::Unknot, 0, 0}; }
  static TorusRecognition not_torus() { return {Kind::NotTorus, 0, 0}; }
  static TorusRecognition torus(Int a, Int b) { return {Kind::Torus, std::move(a), std::move(b)}; }
};

/// Decide whether f is the Alexander polynomial of a torus knot, and recover
/// the parameter set {A,B} when it is.
///
/// The breadth gives 2g = (A-1)(B-1), so the divisor pairs of 2g list every
/// candidate product N = AB <= 4g+2.  The product actually realized is the
/// largest N with Phi_N | t^g f (the roots of Delta of maximal order are the
/// primitive AB-th roots of unity); {A,B} are then the roots of
/// x^2 - (N+1-2g)x + N.  A final round trip against the closed form keeps the
/// recognition exact.
inline TorusRecognition recognize_from_alexander(const LaurentPoly& f) {
  if (f.is_one()) return TorusRecognition::unknot();
  if (f.is_zero() || !f.is_symmetric() || f.eval_at_one() != 1)
    return TorusRecognition::not_torus();
  const long long g = f.max_exp();
  if (g <= 0 || !to_int(2 * g).fits_slong_p()) return TorusRecognition::not_torus();
  const long long twice_g = 2 * g;

  // Candidate (A,B) from divisor pairs of 2g, largest product first.
  std::vector<std::pair<long long, long long>> cands;
  for (long long d = 1; d * d <= twice_g; ++d) {
    if (twice_g % d != 0) continue;
    const long long a = d + 1, b = twice_g / d + 1;
    if (a >= 2 && gcd(to_int(a), to_int(b)) == 1) cands.emplace_back(a, b);
  }
  // d ascending gives products descending: (d+1)(2g/d+1) decreases in d here.
  const IntPoly dense = [&] {
    std::vector<Int> c(static_cast<std::size_t>(twice_g) + 1, Int(0));
    for (const auto& [e, v] : f.terms()) c[static_cast<std::size_t>(e + g)] = v;
    return IntPoly(std::move(c));
  }();

  for (const auto& [a, b] : cands) {
    if (!dense.divisible_by(cyclotomic(a * b))) continue;
    TorusKnot candidate{Int(static_cast<long>(a)), Int(static_cast<long>(b))};
    if (candidate.alexander() == f)
      return TorusRecognition::torus(to_int(a), to_int(b));
    break;  // maximal cyclotomic index is wrong: not a torus Alexander polynomial
  }
  return TorusRecognition::not_torus();
}

}  // namespace ksl
