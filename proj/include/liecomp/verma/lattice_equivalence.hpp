#pragma once

// Square-summability of R1 - R2 along the lattice h0 + j, j = 0, 1, 2, ...
// Two nonlinear sl(2) relations [e_+, e_-] = R(e_0) give the same
// Hilbert-Schmidt-projective highest weight representations exactly when
// Σ_j |R1(h+j) - R2(h+j)|^2 is finite.

#include <cmath>
#include <string>

#include "liecomp/exact/expression.hpp"
#include "liecomp/exact/tower.hpp"

namespace liecomp::verma {

using RationalUnivariate = exact::RationalFunction<exact::Rational>;

namespace detail {

/// Smallest j >= 0 with den(h0 + j) = 0, or -1 when there is none.
inline long lattice_pole(const RationalUnivariate& r, const Rational& h0) {
  const auto& den = r.denominator();
  if (den.degree() <= 0) return -1;
  // Cauchy bound on the roots of the monic denominator.
  Rational bound(0);
  for (int i = 0; i < den.degree(); ++i) bound = std::max(bound, exact::abs(den.coefficient(i)));
  bound += Rational(1);
  Rational span = bound - h0;
  if (span.sign() < 0) return -1;
  mpz_class last = span.numerator() / span.denominator();
  for (long j = 0; mpz_class(j) <= last; ++j) {
    if (den.evaluate(h0 + Rational(j)).is_zero()) return j;
  }
  return -1;
}

}  // namespace detail

/// Symbolic decision: the difference is zero or has asymptotic degree <= -1.
inline bool lattice_equivalent(const RationalUnivariate& r1, const RationalUnivariate& r2, const Rational& h0) {
  RationalUnivariate diff = r1 - r2;
  if (long j = detail::lattice_pole(diff, h0); j >= 0)
    throw PoleError("h0+" + std::to_string(j) + " = " + (h0 + Rational(j)).to_string(),
                    "difference has a pole on the lattice");
  return diff.is_zero() || diff.asymptotic_degree() <= -1;
}

struct LatticeProbe {
  double full = 0;  // Σ_{j < terms}
  double half = 0;  // Σ_{j < terms/2}
  bool converges = false;
};

/// Numeric probe on the first `terms` lattice points. The series is judged
/// convergent when the second half of the partial sum contributes less than
/// a tenth of the total (a divergent tail contributes about half or more).
inline LatticeProbe lattice_probe(const RationalUnivariate& r1, const RationalUnivariate& r2, const Rational& h0,
                                  long terms) {
  RationalUnivariate diff = r1 - r2;
  if (long j = detail::lattice_pole(diff, h0); j >= 0 && j < terms)
    throw PoleError("h0+" + std::to_string(j), "difference has a pole on the lattice");
  LatticeProbe p;
  long double acc = 0;
  const double x0 = h0.to_double();
  const long half = terms / 2;
  for (long j = 0; j < terms; ++j) {
    // Double evaluation is enough for a probe; the decision itself is exact.
    double x = x0 + static_cast<double>(j);
    double num = 0, den = 0;
    const auto& nc = diff.numerator().coefficients();
    const auto& dc = diff.denominator().coefficients();
    for (auto it = nc.rbegin(); it != nc.rend(); ++it) num = num * x + it->to_double();
    for (auto it = dc.rbegin(); it != dc.rend(); ++it) den = den * x + it->to_double();
    double v = num / den;
    acc += static_cast<long double>(v) * v;
    if (j + 1 == half) p.half = static_cast<double>(acc);
  }
  p.full = static_cast<double>(acc);
  p.converges = p.full == 0 || (p.full - p.half) < 0.1 * p.full;
  return p;
}

}  // namespace liecomp::verma
