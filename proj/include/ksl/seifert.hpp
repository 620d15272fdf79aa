#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ksl/int.hpp"

namespace ksl {
namespace detail {

/// Seifert matrix of the positive torus knot T_{A,B} on the genus-2g surface
/// produced by Seifert's algorithm on the closed braid (s_1...s_{A-1})^B.
///
/// Basis: one loop e_{c,j} per pair of consecutive occurrences of the braid
/// letter s_{c+1} (column c in [0,A-2], rung j in [0,B-2]).  Nonzero linking
/// entries, with loops indexed as c*(B-1)+j:
///   lk(e_{c,j},   e_{c,j})    = -1   (each band pair is a positive Hopf band)
///   lk(e_{c,j},   e_{c,j+1})  =  1   (consecutive rungs share a band)
///   lk(e_{c+1,j},   e_{c,j})  =  1   (adjacent columns, interleaved rungs)
///   lk(e_{c+1,j-1}, e_{c,j})  = -1
/// The symmetrization V + V^T is the grid form with -2 on the diagonal, +1 on
/// column/rung neighbours and -1 on the skew diagonal; det(tV - V^T) equals
/// t^g * Delta_{T_{A,B}}(t), which pins every entry (checked in the tests).
inline std::vector<std::vector<int>> torus_seifert_matrix(long A, long B) {
  if (A < 2 || B < 2) throw std::invalid_argument("seifert matrix needs A,B >= 2");
  const std::size_t cols = static_cast<std::size_t>(A - 1);
  const std::size_t rungs = static_cast<std::size_t>(B - 1);
  const std::size_t n = cols * rungs;
  auto id = [&](std::size_t c, std::size_t j) { return c * rungs + j; };
  std::vector<std::vector<int>> v(n, std::vector<int>(n, 0));
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t j = 0; j < rungs; ++j) {
      v[id(c, j)][id(c, j)] = -1;
      if (j + 1 < rungs) v[id(c, j)][id(c, j + 1)] = 1;
      if (c + 1 < cols) {
        v[id(c + 1, j)][id(c, j)] = 1;
        if (j > 0) v[id(c + 1, j - 1)][id(c, j)] = -1;
      }
    }
  return v;
}

/// Signature of a symmetric rational matrix by exact congruence
/// diagonalization (Lagrange reduction with symmetric pivot repair).
inline long signature_of_symmetric(std::vector<std::vector<Rat>> m) {
  const std::size_t n = m.size();
  long sig = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i][i] == 0) {
      std::size_t j = i + 1;
      while (j < n && m[j][j] == 0) ++j;
      if (j < n) {
        std::swap(m[i], m[j]);
        for (auto& row : m) std::swap(row[i], row[j]);
      } else {
        for (j = i + 1; j < n && m[i][j] == 0; ++j) {
        }
        if (j == n) continue;  // row (and column) already zero
        for (std::size_t k = 0; k < n; ++k) m[i][k] += m[j][k];
        for (std::size_t k = 0; k < n; ++k) m[k][i] += m[k][j];
      }
    }
    const Rat pivot = m[i][i];
    if (pivot == 0) continue;
    sig += pivot > 0 ? 1 : -1;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (m[j][i] == 0) continue;
      const Rat f = m[j][i] / pivot;
      for (std::size_t k = i; k < n; ++k) m[j][k] -= f * m[i][k];
      for (std::size_t k = i; k < n; ++k) m[k][j] = m[j][k];
    }
  }
  return sig;
}

/// Signature of the positive torus knot T_{A,B}: diagonalize V + V^T exactly.
inline long positive_torus_signature(long A, long B) {
  if (A == 1 || B == 1) return 0;
  const long dim = (A - 1) * (B - 1);
  if (dim > 2000)
    throw std::domain_error("signature: torus knot genus too large for exact diagonalization");
  auto v = torus_seifert_matrix(A, B);
  const std::size_t n = v.size();
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rat(v[i][j] + v[j][i]);
  return signature_of_symmetric(std::move(m));
}

}  // namespace detail
}  // namespace ksl
