#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "ksl/int.hpp"

namespace ksl {

/// Integer Laurent polynomial in t, stored sparsely as exponent -> coefficient.
/// No zero coefficient is ever stored; the zero polynomial has an empty map.
class LaurentPoly {
 public:
  using Exp = long long;
  using TermMap = std::map<Exp, Int>;

  LaurentPoly() = default;

  static LaurentPoly zero() { return LaurentPoly(); }

  static LaurentPoly one() { return monomial(Int(1), 0); }

  static LaurentPoly monomial(Int coeff, Exp exp) {
    LaurentPoly f;
    if (coeff != 0) f.terms_.emplace(exp, std::move(coeff));
    return f;
  }

  static LaurentPoly from_terms(TermMap terms) {
    LaurentPoly f;
    for (auto& [e, c] : terms)
      if (c != 0) f.terms_.emplace(e, std::move(c));
    return f;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const { return terms_.size() == 1 && coeff(0) == 1; }
  std::size_t term_count() const { return terms_.size(); }

  Int coeff(Exp e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
  }

  Exp min_exp() const {
    require_nonzero();
    return terms_.begin()->first;
  }

  Exp max_exp() const {
    require_nonzero();
    return terms_.rbegin()->first;
  }

  /// max_exp - min_exp; the breadth of the zero polynomial is undefined.
  Exp breadth() const { return max_exp() - min_exp(); }

  LaurentPoly operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, Int(-c));
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    if (this == &o) {
      for (auto& [e, c] : terms_) c *= 2;
      return *this;
    }
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  LaurentPoly& operator-=(const LaurentPoly& o) {
    if (this == &o) {
      terms_.clear();
      return *this;
    }
    for (const auto& [e, c] : o.terms_) add_term(e, Int(-c));
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  /// Multiplication by t^k.
  LaurentPoly shifted(Exp k) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
    return r;
  }

  /// Substitution t -> t^-1.
  LaurentPoly reversed() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
  }

  /// True iff f(t) = f(t^-1).
  bool is_symmetric() const { return *this == reversed(); }

  Int eval_at_one() const {
    Int s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }

  Int eval_at_minus_one() const {
    Int s = 0;
    for (const auto& [e, c] : terms_) s += (e % 2 == 0) ? c : Int(-c);
    return s;
  }

  /// f''(1) computed term-wise as sum c_e * e * (e - 1); always even.
  Int second_derivative_at_one() const {
    Int s = 0;
    for (const auto& [e, c] : terms_) s += c * (to_int(e) * to_int(e - 1));
    return s;
  }

  /// Canonical rendering, descending exponents: "t^2 - t + 1 - t^-1 + t^-2".
  std::string to_string(const std::string& var = "t") const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const Exp e = it->first;
      const Int& c = it->second;
      if (first) {
        if (c < 0) os << "-";
        first = false;
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      Int a = iabs(c);
      if (e == 0) {
        os << a.get_str();
      } else {
        if (a != 1) os << a.get_str();
        os << var;
        if (e != 1) os << "^" << e;
      }
    }
    return os.str();
  }

 private:
  void require_nonzero() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no extremal exponent");
  }

  void add_term(Exp e, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  TermMap terms_;
};

/// f''(1) as an exact integer.
inline Int second_derivative_at_one(const LaurentPoly& f) {
  return f.second_derivative_at_one();
}

}  // namespace ksl
