#pragma once

// The scalar tower Q ⊂ Q(h) ⊂ Q(h)(n). Every operator coefficient lives in
// Q(h)(n): n is the degree of the monomial being acted on and h the highest
// weight, kept formal until a numeric boundary substitutes a rational.

#include <string>
#include <utility>
#include <vector>

#include "liecomp/exact/polynomial.hpp"
#include "liecomp/exact/rational.hpp"
#include "liecomp/exact/rational_function.hpp"

namespace liecomp::exact {

/// Q(h)
using Qh = RationalFunction<Rational>;
/// Q(h)(n)
using Qhn = RationalFunction<Qh>;

/// Q[h], used as a coefficient ring for gcds in Q(h)[n].
using PolyH = Polynomial<Rational>;
/// Q[h][n]
using PolyHN = Polynomial<PolyH>;

namespace detail {

inline PolyH lcm(const PolyH& a, const PolyH& b) {
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  return exact_quotient(a, gcd(a, b)) * b;
}

/// Monic content (gcd of all coefficients) of a polynomial over Q[h].
inline PolyH content(const PolyHN& p) {
  PolyH g;
  for (const auto& c : p.coefficients()) {
    g = gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

/// Primitive part, additionally scaled so that the leading coefficient of
/// the leading coefficient is 1 (keeps rational sizes in check).
inline PolyHN primitive_part(const PolyHN& p) {
  if (p.is_zero()) return p;
  PolyH g = content(p);
  Rational scale = Rational(1) / p.leading().leading();
  if (g.is_one()) {
    if (scale.is_one()) return p;
    return p.map_coefficients([&](const PolyH& c) { return c.scaled(scale); });
  }
  // g is monic, so lc(lc(p / g)) == lc(lc(p)).
  return p.map_coefficients([&](const PolyH& c) { return exact_quotient(c, g).scaled(scale); });
}

/// Clears Q(h) denominators: p = ring / common, with common ∈ Q[h] monic.
inline std::pair<PolyHN, PolyH> clear_denominators(const Polynomial<Qh>& p) {
  PolyH common(Rational(1));
  for (const auto& c : p.coefficients()) common = lcm(common, c.denominator());
  std::vector<PolyH> out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) {
    out.push_back(c.numerator() * (c.denominator().is_one() ? common : exact_quotient(common, c.denominator())));
  }
  return {PolyHN(std::move(out)), std::move(common)};
}

/// Pseudo-remainder of a by b over Q[h].
inline PolyHN pseudo_remainder(PolyHN a, const PolyHN& b) {
  const int db = b.degree();
  const PolyH& lb = b.leading();
  while (!a.is_zero() && a.degree() >= db) {
    PolyH la = a.leading();
    int shift = a.degree() - db;
    std::vector<PolyH> r(static_cast<std::size_t>(a.degree()));
    const auto& ac = a.coefficients();
    const auto& bc = b.coefficients();
    for (int i = 0; i < a.degree(); ++i) r[static_cast<std::size_t>(i)] = ac[static_cast<std::size_t>(i)] * lb;
    for (int j = 0; j < db; ++j) r[static_cast<std::size_t>(j + shift)] -= bc[static_cast<std::size_t>(j)] * la;
    a = PolyHN(std::move(r));
  }
  return a;
}

inline Polynomial<Rational> specialize_ring(const PolyHN& p, const Rational& h0) {
  return p.map_coefficients([&](const PolyH& c) { return c.evaluate(h0); });
}

}  // namespace detail

/// gcd in Q(h)[n] through the primitive remainder sequence in Q[h][n].
/// A specialization h -> h* first detects the (common) coprime case: a
/// constant gcd after specialization proves the generic gcd is constant.
template <>
struct PolynomialGcd<Qh> {
  static Polynomial<Qh> apply(const Polynomial<Qh>& a, const Polynomial<Qh>& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.degree() == 0 || b.degree() == 0) return Polynomial<Qh>(Qh(1));
    if (a == b) return a.monic();
    PolyHN A = detail::primitive_part(detail::clear_denominators(a).first);
    PolyHN B = detail::primitive_part(detail::clear_denominators(b).first);
    static const Rational probes[] = {Rational(113, 7), Rational(-59, 11)};
    for (const auto& p : probes) {
      if (A.leading().evaluate(p).is_zero() || B.leading().evaluate(p).is_zero()) continue;
      auto g = gcd(detail::specialize_ring(A, p), detail::specialize_ring(B, p));
      if (g.degree() == 0) return Polynomial<Qh>(Qh(1));
      break;
    }
    if (A.degree() < B.degree()) std::swap(A, B);
    while (!B.is_zero()) {
      PolyHN r = detail::pseudo_remainder(A, B);
      A = std::move(B);
      B = detail::primitive_part(r);
    }
    if (A.degree() == 0) return Polynomial<Qh>(Qh(1));
    return A.map_coefficients([](const PolyH& c) { return Qh(c); }).monic();
  }
};

/// Numerator and denominator of a Q(h)(n) element after h = h0, with the
/// common content removed but no cancellation in n. Where the denominator is
/// nonzero at some n the quotient equals the value of the two-variable
/// function there; a zero marks a point reached only as a limit.
struct SpecializedFraction {
  Polynomial<Rational> numerator;
  Polynomial<Rational> denominator;
};

inline SpecializedFraction specialize_fraction(const Qhn& r, const Rational& h0) {
  auto [n, ln] = detail::clear_denominators(r.numerator());
  auto [d, ld] = detail::clear_denominators(r.denominator());
  // r = (n * ld) / (d * ln)
  PolyHN num = n.map_coefficients([&](const PolyH& c) { return c * ld; });
  PolyHN den = d.map_coefficients([&](const PolyH& c) { return c * ln; });
  PolyH g = gcd(detail::content(num), detail::content(den));
  if (!g.is_one() && !g.is_zero()) {
    num = num.map_coefficients([&](const PolyH& c) { return exact_quotient(c, g); });
    den = den.map_coefficients([&](const PolyH& c) { return exact_quotient(c, g); });
  }
  auto ds = detail::specialize_ring(den, h0);
  if (ds.is_zero()) throw PoleError("h=" + h0.to_string(), "specializing the highest weight");
  return {detail::specialize_ring(num, h0), std::move(ds)};
}

/// Substitutes h = h0, giving a rational function of n over Q.
/// Throws PoleError if the coefficient field element has a pole at h0.
inline RationalFunction<Rational> specialize_h(const Qhn& r, const Rational& h0) {
  auto f = specialize_fraction(r, h0);
  return RationalFunction<Rational>(std::move(f.numerator), std::move(f.denominator));
}

/// Value at an integer (or any Q(h)) point n.
inline Qh evaluate_at(const Qhn& r, const Qh& n) {
  return r.evaluate(n, [](const Qh& x) { return "n=" + (x.is_constant() ? x.constant_value().to_string() : std::string("<expr>")); });
}

inline Rational evaluate_at(const RationalFunction<Rational>& r, const Rational& x) {
  return r.evaluate(x, [](const Rational& p) { return p.to_string(); });
}

/// The formal symbol h as an element of Q(h)(n).
inline Qhn symbol_h() { return Qhn(Qh::variable()); }
/// The formal symbol n.
inline Qhn symbol_n() { return Qhn::variable(); }

}  // namespace liecomp::exact
