#pragma once

// Numeric boundary: substitute a rational highest weight h0 > 0 and look at
// matrix elements in the orthonormal basis e_n = z^n / sqrt(w(n)).
// Squared matrix elements are exact rationals; only the final square root
// (truncate_numeric) and the partial sums are floating point.

#include <cmath>
#include <string>
#include <vector>

#include "liecomp/shiftop/shift_operator.hpp"

namespace liecomp::shiftop {

/// Scalar type of truncated matrices, reported alongside numeric output.
inline constexpr std::string_view kNumericScalar = "float64";

struct NumericMatrix {
  int size = 0;
  std::vector<double> data;  // row-major
  double operator()(int row, int col) const {
    return data[static_cast<std::size_t>(row) * static_cast<std::size_t>(size) + static_cast<std::size_t>(col)];
  }
  double& operator()(int row, int col) {
    return data[static_cast<std::size_t>(row) * static_cast<std::size_t>(size) + static_cast<std::size_t>(col)];
  }
};

namespace detail {

inline void require_unitarizable(const Rational& h0) {
  if (h0.sign() <= 0) throw DomainError("numeric evaluation needs h0 > 0 (got " + h0.to_string() + ")");
}

/// w(n + d) / w(n) at h = h0, exact.
inline Rational weight_ratio(int n, int d, const Rational& h0) {
  Rational r(1);
  auto factor = [&](int m) { return Rational(m) * (Rational(2) * h0 + Rational(m - 1)); };
  if (d > 0) {
    for (int m = n + 1; m <= n + d; ++m) r *= factor(m);
  } else {
    for (int m = n + d + 1; m <= n; ++m) r /= factor(m);
  }
  return r;
}

struct SpecializedComponent {
  int shift;
  Qhn generic;
  exact::SpecializedFraction fraction;
};

inline std::vector<SpecializedComponent> specialize(const ShiftOperator& a, const Rational& h0) {
  std::vector<SpecializedComponent> out;
  for (const auto& [d, c] : a.components()) out.push_back({d, c, exact::specialize_fraction(c, h0)});
  return out;
}

/// c(n) at h = h0. Where the specialized denominator vanishes, n is
/// substituted first and the weight second, which is the value the operator
/// family takes at h0 (it is continuous in h for h > 0).
inline Rational coefficient_at(const SpecializedComponent& s, int n, const Rational& h0) {
  const Rational x(n);
  Rational den = s.fraction.denominator.evaluate(x);
  if (!den.is_zero()) return s.fraction.numerator.evaluate(x) / den;
  return exact::evaluate_at(exact::evaluate_at(s.generic, Qh(x)), h0);
}

/// |<e_{n+d}, A e_n>|^2 for one component, exact.
inline Rational squared_element(const SpecializedComponent& s, int n, const Rational& h0) {
  Rational c = coefficient_at(s, n, h0);
  if (c.is_zero()) return c;
  if (n + s.shift < 0)
    throw NegativeExponentError("component with shift " + std::to_string(s.shift) + " is nonzero on z^" +
                                std::to_string(n));
  return c * c * weight_ratio(n, s.shift, h0);
}

}  // namespace detail

/// Matrix of A on span(e_0..e_N) at h = h0: entry (n+d, n) = c(n) sqrt(w(n+d)/w(n)).
inline NumericMatrix truncate_numeric(const ShiftOperator& a, int N, const Rational& h0) {
  detail::require_unitarizable(h0);
  if (N < 0) throw DomainError("truncation size must be nonnegative");
  NumericMatrix m{N + 1, std::vector<double>(static_cast<std::size_t>(N + 1) * static_cast<std::size_t>(N + 1), 0.0)};
  for (const auto& s : detail::specialize(a, h0)) {
    for (int n = 0; n <= N; ++n) {
      int row = n + s.shift;
      if (row > N) continue;
      Rational c = detail::coefficient_at(s, n, h0);
      if (c.is_zero()) continue;
      if (row < 0)
        throw NegativeExponentError("component with shift " + std::to_string(s.shift) + " is nonzero on z^" +
                                    std::to_string(n));
      m(row, n) += c.to_double() * std::sqrt(detail::weight_ratio(n, s.shift, h0).to_double());
    }
  }
  return m;
}

/// S_k = Σ_{n <= k} Σ_components |<e_{n+d}, A e_n>|^2 for k = 0..N
/// (column sums of the squared orthonormal matrix elements, all rows).
inline std::vector<double> hs_partial_sums(const ShiftOperator& a, int N, const Rational& h0) {
  detail::require_unitarizable(h0);
  if (N < 0) throw DomainError("truncation size must be nonnegative");
  auto comps = detail::specialize(a, h0);
  std::vector<double> sums;
  sums.reserve(static_cast<std::size_t>(N) + 1);
  long double acc = 0;
  for (int n = 0; n <= N; ++n) {
    for (const auto& s : comps) acc += static_cast<long double>(detail::squared_element(s, n, h0).to_double());
    sums.push_back(static_cast<double>(acc));
  }
  return sums;
}

/// <A z^m, z^n> with <z^m, z^n> = δ_mn w(n), at h = h0 (exact).
inline Rational monomial_inner_product(const ShiftOperator& a, int m, int n, const Rational& h0) {
  int d = n - m;
  auto it = a.components().find(d);
  if (it == a.components().end()) return Rational(0);
  detail::SpecializedComponent s{d, it->second, exact::specialize_fraction(it->second, h0)};
  Rational c = detail::coefficient_at(s, m, h0);
  return c * detail::weight_ratio(0, n, h0);
}

}  // namespace liecomp::shiftop
