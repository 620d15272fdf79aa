#pragma once

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ksl/int.hpp"
#include "ksl/laurent.hpp"

namespace ksl {

/// Raised when a division in Z[n] that the caller requires to be exact
/// leaves a nonzero remainder.
struct NonExactDivision : std::domain_error {
  NonExactDivision() : std::domain_error("polynomial division is not exact over Z") {}
};

/// Dense integer polynomial, coefficients ascending by degree, no trailing zeros.
class IntPoly {
 public:
  IntPoly() = default;

  explicit IntPoly(std::vector<Int> ascending) : c_(std::move(ascending)) { trim(); }

  IntPoly(std::initializer_list<long> ascending) {
    for (long v : ascending) c_.emplace_back(v);
    trim();
  }

  static IntPoly zero() { return IntPoly(); }
  static IntPoly constant(Int v) { return monomial(std::move(v), 0); }
  static IntPoly variable() { return monomial(Int(1), 1); }

  static IntPoly monomial(Int coeff, std::size_t deg) {
    IntPoly f;
    if (coeff != 0) {
      f.c_.assign(deg + 1, Int(0));
      f.c_[deg] = std::move(coeff);
    }
    return f;
  }

  /// x^e - 1.
  static IntPoly xpow_minus_one(std::size_t e) {
    IntPoly f;
    f.c_.assign(e + 1, Int(0));
    f.c_[0] = -1;
    f.c_[e] = 1;
    return f;
  }

  bool is_zero() const { return c_.empty(); }

  /// Degree, or nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
  }

  const Int& leading() const {
    if (c_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
    return c_.back();
  }

  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  const std::vector<Int>& coeffs() const { return c_; }

  Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

  IntPoly operator-() const {
    IntPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(i) + b.coeff(i);
    r.trim();
    return r;
  }

  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    IntPoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    r.trim();
    return r;
  }

  friend IntPoly operator+(const IntPoly& a, const Int& v) { return a + constant(v); }
  friend IntPoly operator-(const IntPoly& a, const Int& v) { return a - constant(v); }
  friend IntPoly operator*(const IntPoly& a, const Int& v) { return a * constant(v); }

  /// Long division over Z. Returns the quotient when f = g*h exactly with
  /// h in Z[n]; nullopt otherwise. Works one leading term at a time, so a
  /// non-divisible leading coefficient or a nonzero final remainder both
  /// signal inexactness.
  std::optional<IntPoly> try_exact_div(const IntPoly& g) const {
    if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (is_zero()) return IntPoly();
    if (c_.size() < g.c_.size()) return std::nullopt;
    std::vector<Int> rem = c_;
    std::vector<Int> quot(c_.size() - g.c_.size() + 1, Int(0));
    const auto gdeg = g.c_.size() - 1;
    for (std::size_t i = quot.size(); i-- > 0;) {
      const Int& top = rem[i + gdeg];
      if (top == 0) continue;
      Int q, r;
      mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), g.leading().get_mpz_t());
      if (r != 0) return std::nullopt;
      quot[i] = q;
      for (std::size_t j = 0; j <= gdeg; ++j) rem[i + j] -= q * g.c_[j];
    }
    for (const Int& v : rem)
      if (v != 0) return std::nullopt;
    IntPoly h(std::move(quot));
    return h;
  }

  /// Exact quotient; throws NonExactDivision if the division leaves a remainder.
  IntPoly exact_div(const IntPoly& g) const {
    auto h = try_exact_div(g);
    if (!h) throw NonExactDivision();
    return *std::move(h);
  }

  bool divisible_by(const IntPoly& g) const { return try_exact_div(g).has_value(); }

  /// Horner evaluation, exact.
  Int eval(const Int& n) const {
    Int acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * n + c_[i];
    return acc;
  }

  /// View as a polynomial in t and shift by t^shift.
  LaurentPoly to_laurent(LaurentPoly::Exp shift = 0) const {
    LaurentPoly::TermMap terms;
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != 0) terms.emplace(static_cast<LaurentPoly::Exp>(i) + shift, c_[i]);
    return LaurentPoly::from_terms(std::move(terms));
  }

  /// Canonical rendering, descending powers: "n^3 + 3n^2 + n - 1".
  std::string to_string(const std::string& var = "n") const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
      const Int& c = c_[i];
      if (c == 0) continue;
      if (first) {
        if (c < 0) os << "-";
        first = false;
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      Int a = iabs(c);
      if (i == 0) {
        os << a.get_str();
      } else {
        if (a != 1) os << a.get_str();
        os << var;
        if (i != 1) os << "^" << i;
      }
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Int> c_;
};

}  // namespace ksl
