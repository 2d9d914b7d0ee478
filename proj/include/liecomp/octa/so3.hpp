#pragma once

// Irreducible representations of compact so(3) with [X,Y] = Z, [Y,Z] = X,
// [Z,X] = Y. Half-integer spins have no real form, so entries lie in Q(i).

#include <array>

#include "liecomp/findim/matrix.hpp"

namespace liecomp::octa {

using findim::GaussianRational;
using CMatrix = findim::Matrix<GaussianRational>;
using So3Triple = std::array<CMatrix, 3>;

/// Spin two_j/2 on the basis v_k = F^k v_0, k = 0..two_j, of the sl(2)
/// module: H v_k = (two_j - 2k) v_k, F v_k = v_{k+1}, E v_k = k(two_j - k + 1) v_{k-1}.
/// X = -i/2 (E + F), Y = -1/2 (E - F), Z = -i/2 H.
inline So3Triple so3_irrep(unsigned two_j) {
  const std::size_t n = two_j + 1;
  CMatrix e(n, n), f(n, n), h(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    h(k, k) = GaussianRational(static_cast<long>(two_j) - 2 * static_cast<long>(k));
    if (k + 1 < n) f(k + 1, k) = GaussianRational(1);
    if (k > 0) e(k - 1, k) = GaussianRational(static_cast<long>(k * (two_j - k + 1)));
  }
  const GaussianRational half_i(findim::Rational(0), findim::Rational(-1, 2));
  const GaussianRational half(findim::Rational(-1, 2));
  return {(e + f).scaled(half_i), (e - f).scaled(half), h.scaled(half_i)};
}

}  // namespace liecomp::octa
