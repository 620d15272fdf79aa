#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ksl/int.hpp"
#include "ksl/laurent.hpp"
#include "ksl/torus_knot.hpp"

namespace ksl {

/// Exponent sequence a_0 > a_1 > ... > a_{g-1} encoding the Alexander
/// polynomial of a genus-g L-space knot as
///   Delta(t) = (1 - t^-1) * sum_i t^{a_i} + t^{-g}.
///
/// A sequence is admissible iff a_0 = g, a_i <= g - 2i, a_{g-1} = 2 - g, and
/// the middle exponents pick exactly one element from each of the pairs
/// {g-2, 3-g}, {g-3, 4-g}, ..., {1, 0}.  Candidates are not guaranteed to be
/// realized by an actual L-space knot; enumeration below is over the
/// admissible sequences only.
class Staircase {
 public:
  explicit Staircase(std::vector<long long> exps) : exps_(std::move(exps)) {}

  const std::vector<long long>& exps() const { return exps_; }
  long long genus() const { return static_cast<long long>(exps_.size()); }

  friend bool operator==(const Staircase& x, const Staircase& y) { return x.exps_ == y.exps_; }
  friend bool operator!=(const Staircase& x, const Staircase& y) { return !(x == y); }
  friend bool operator<(const Staircase& x, const Staircase& y) { return x.exps_ < y.exps_; }

  bool validate() const {
    const long long g = genus();
    if (g < 1) return false;
    if (exps_.front() != g) return false;
    if (exps_.back() != 2 - g) return false;
    for (std::size_t i = 0; i + 1 < exps_.size(); ++i)
      if (exps_[i] <= exps_[i + 1]) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > g - 2 * static_cast<long long>(i)) return false;
    if (g >= 3) {
      // one exponent from each pair {x, 1-x}, x = 1..g-2
      std::set<long long> mid(exps_.begin() + 1, exps_.end() - 1);
      if (mid.size() != static_cast<std::size_t>(g - 2)) return false;
      for (long long x = 1; x <= g - 2; ++x) {
        const bool hi = mid.count(x) > 0;
        const bool lo = mid.count(1 - x) > 0;
        if (hi == lo) return false;
      }
    }
    return true;
  }

  /// Delta(t) = (1 - t^-1) sum t^{a_i} + t^{-g}; alternating +-1 coefficients.
  LaurentPoly to_alexander() const {
    require_valid();
    LaurentPoly sum;
    for (long long a : exps_) sum += LaurentPoly::monomial(Int(1), a);
    LaurentPoly one_minus = LaurentPoly::one() - LaurentPoly::monomial(Int(1), -1);
    LaurentPoly delta = one_minus * sum + LaurentPoly::monomial(Int(1), -genus());
    if (!delta.is_symmetric() || delta.eval_at_one() != 1)
      throw std::logic_error("to_alexander: normalization Delta(t) = Delta(1/t), Delta(1) = 1 failed");
    return delta;
  }

  /// Delta''(1)/2 = sum a_i + g(g-1)/2.
  Int delta_dd_half() const {
    require_valid();
    Int s = 0;
    for (long long a : exps_) s += to_int(a);
    const Int g = to_int(genus());
    return s + exact_div(g * (g - 1), Int(2));
  }

  std::string to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (i) os << ",";
      os << exps_[i];
    }
    os << "]";
    return os.str();
  }

 private:
  void require_valid() const {
    if (!validate()) throw std::domain_error("invalid staircase: " + to_string());
  }

  std::vector<long long> exps_;
};

/// All admissible staircases of genus g, in descending lexicographic order.
/// The candidate count is bounded by 2^(g-2), so enumeration is capped.
inline std::vector<Staircase> enumerate_staircases(long long g) {
  if (g < 1) throw std::invalid_argument("staircase genus must be >= 1");
  if (g > 24) throw std::domain_error("staircase enumeration is capped at genus 24");
  if (g == 1) return {Staircase({1})};
  std::vector<Staircase> out;
  const long long pairs = g - 2;
  for (unsigned long long mask = 0; mask < (1ull << pairs); ++mask) {
    std::vector<long long> exps;
    exps.push_back(g);
    for (long long i = 0; i < pairs; ++i) {
      const long long x = g - 2 - i;  // pair {x, 1-x}
      exps.push_back((mask >> i & 1ull) ? 1 - x : x);
    }
    std::sort(exps.begin() + 1, exps.end(), std::greater<>());
    exps.push_back(2 - g);
    Staircase s(std::move(exps));
    if (s.validate()) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const Staircase& x, const Staircase& y) { return y < x; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Maximum of Delta''(1)/2 over all admissible genus-g staircases, with the
/// unique maximizer [g, g-2, ..., 2-g].
inline std::pair<Int, Staircase> extremal_bound_check(long long g) {
  auto all = enumerate_staircases(g);
  const Staircase* best = nullptr;
  Int max;
  for (const auto& s : all) {
    Int v = s.delta_dd_half();
    if (!best || v > max) {
      best = &s;
      max = v;
    }
  }
  return {max, *best};
}

struct StaircaseCollision {
  long long genus;
  Staircase first, second;
};

/// All unordered pairs of distinct same-genus staircases sharing Delta''(1)/2,
/// over genus 1..g_max.  Staircases are bucketed by value first; pairs come
/// out in enumeration order within each bucket.
inline std::vector<StaircaseCollision> dd_collision_search(long long g_max) {
  if (g_max < 1) throw std::invalid_argument("dd_collision_search needs g_max >= 1");
  std::vector<StaircaseCollision> out;
  for (long long g = 1; g <= g_max; ++g) {
    const auto all = enumerate_staircases(g);
    std::map<Int, std::vector<std::size_t>> buckets;
    for (std::size_t i = 0; i < all.size(); ++i) buckets[all[i].delta_dd_half()].push_back(i);
    for (std::size_t i = 0; i < all.size(); ++i) {
      const auto& bucket = buckets[all[i].delta_dd_half()];
      for (std::size_t j : bucket)
        if (j > i) out.push_back({g, all[i], all[j]});
    }
  }
  return out;
}

struct HfkGenerator {
  long long alexander;
  long long maslov;
  friend bool operator==(const HfkGenerator&, const HfkGenerator&) = default;
};

/// Bigraded knot Floer generators of the staircase: one per nonzero Alexander
/// coefficient.  Walking the exponents of Delta from the top, the Maslov
/// grading drops by 2*(exponent gap) - 1 into each negative coefficient and by
/// exactly 1 out of it.  The result is self-checked against the three facts
/// that pin it: graded Euler characteristic equal to Delta, the grading
/// symmetry (A, M) <-> (-A, M - 2A), and top generator (g, 0).
inline std::vector<HfkGenerator> hfk_bigraded(const Staircase& s) {
  const LaurentPoly delta = s.to_alexander();
  std::vector<long long> exps;
  for (auto it = delta.terms().rbegin(); it != delta.terms().rend(); ++it)
    exps.push_back(it->first);
  std::vector<HfkGenerator> gens;
  long long m = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (i > 0) {
      const long long gap = exps[i - 1] - exps[i];
      m -= (i % 2 == 1) ? 2 * gap - 1 : 1;
    }
    gens.push_back({exps[i], m});
  }

  // Postconditions (the Maslov recursion is trusted only through these).
  LaurentPoly euler;
  for (const auto& gen : gens)
    euler += LaurentPoly::monomial(Int(gen.maslov % 2 == 0 ? 1 : -1), gen.alexander);
  if (euler != delta) throw std::logic_error("hfk_bigraded: Euler characteristic mismatch");
  if (gens.front().alexander != s.genus() || gens.front().maslov != 0)
    throw std::logic_error("hfk_bigraded: top generator is not (g, 0)");
  for (const auto& gen : gens) {
    const HfkGenerator dual{-gen.alexander, gen.maslov - 2 * gen.alexander};
    if (std::find(gens.begin(), gens.end(), dual) == gens.end())
      throw std::logic_error("hfk_bigraded: symmetry pairing failed");
  }
  return gens;
}

/// dim HF-hat of p/q surgery on an L-space knot with this staircase:
/// q(2g-1) + |p - q(2g-1)|.
inline Int surgery_hf_dim(const Staircase& s, const Int& p, const Int& q) {
  if (p == 0 || q < 1 || gcd(iabs(p), q) != 1)
    throw std::invalid_argument("surgery_hf_dim: need p != 0, q >= 1, gcd(p,q) = 1");
  const Int nu = to_int(2 * s.genus() - 1);
  return q * nu + iabs(p - q * nu);
}

/// p/q >= 2g-1, equivalently surgery_hf_dim == |p|.
inline bool is_lspace_slope(const Staircase& s, const Int& p, const Int& q) {
  if (p == 0 || q < 1 || gcd(iabs(p), q) != 1)
    throw std::invalid_argument("is_lspace_slope: need p != 0, q >= 1, gcd(p,q) = 1");
  return p >= q * to_int(2 * s.genus() - 1);
}

/// (dim HF-hat(S^3_m) - m)/2 for integer m >= max(2g-1, 1); identically zero
/// on staircases.
inline Int hf_odd_dim_large(const Staircase& s, const Int& m) {
  if (m < 1 || m < to_int(2 * s.genus() - 1))
    throw std::invalid_argument("hf_odd_dim_large: need m >= 2g-1 and m >= 1");
  return exact_div(surgery_hf_dim(s, m, Int(1)) - m, Int(2));
}

/// First `count` elements of the numerical semigroup generated by A and B,
/// ascending.  The Krcatovich exponents of T_{A,B} are g - s_i over the first
/// g semigroup elements s_i.
inline std::vector<Int> semigroup_elements(const Int& A, const Int& B, std::size_t count) {
  std::set<Int> frontier{Int(0)};
  std::vector<Int> out;
  while (out.size() < count && !frontier.empty()) {
    Int s = *frontier.begin();
    frontier.erase(frontier.begin());
    out.push_back(s);
    frontier.insert(s + A);
    frontier.insert(s + B);
  }
  return out;
}

/// Leading staircase exponents of a positive torus knot, as g - s_i.
inline std::vector<Int> staircase_head(const TorusKnot& t, std::size_t count) {
  if (t.is_trivial()) return {};
  const Int g = t.genus();
  auto croppedCount = count;
  if (g.fits_ulong_p() && g.get_ui() < count) croppedCount = g.get_ui();
  std::vector<Int> head;
  for (const Int& s : semigroup_elements(t.A(), t.B(), croppedCount)) head.push_back(g - s);
  return head;
}

/// Full staircase of a positive torus knot (requires modest genus).
inline Staircase staircase_of(const TorusKnot& t) {
  if (t.is_trivial()) throw std::domain_error("the unknot has no staircase");
  if (!t.is_positive()) throw std::domain_error("only positive torus knots are L-space knots");
  const Int g = t.genus();
  if (!g.fits_ulong_p() || g.get_ui() > 1000000)
    throw std::domain_error("staircase_of: genus too large");
  std::vector<long long> exps;
  for (const Int& v : staircase_head(t, g.get_ui())) exps.push_back(v.get_si());
  return Staircase(std::move(exps));
}

/// Recover a staircase from a symmetric Alexander polynomial, when it has the
/// L-space-knot form; the inverse of Staircase::to_alexander.
inline std::optional<Staircase> staircase_from_alexander(const LaurentPoly& f) {
  if (f.is_zero() || f.is_one() || !f.is_symmetric()) return std::nullopt;
  const long long g = f.max_exp();
  // (Delta - t^-g) / (1 - t^-1) must be a sum of g distinct monomials t^{a_i}.
  LaurentPoly rest = f - LaurentPoly::monomial(Int(1), -g);
  // Divide by (1 - t^-1): walk terms from the top, peeling t^{a} - t^{a-1}.
  std::vector<long long> exps;
  while (!rest.is_zero()) {
    const long long e = rest.max_exp();
    if (rest.coeff(e) != 1) return std::nullopt;
    exps.push_back(e);
    rest -= LaurentPoly::monomial(Int(1), e) - LaurentPoly::monomial(Int(1), e - 1);
    if (exps.size() > static_cast<std::size_t>(g)) return std::nullopt;
  }
  Staircase s(std::move(exps));
  if (!s.validate() || s.to_alexander() != f) return std::nullopt;
  return s;
}

}  // namespace ksl
