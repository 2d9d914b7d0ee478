#pragma once

// Rational functions in one formal symbol over a coefficient field K.
//
// Canonical form: numerator and denominator coprime, denominator monic,
// zero stored as 0/1. Structural equality is therefore mathematical
// equality, which every identity check downstream relies on.

#include <limits>
#include <utility>

#include "liecomp/errors.hpp"
#include "liecomp/exact/polynomial.hpp"

namespace liecomp::exact {

/// Value of asymptotic_degree() for the zero function.
inline constexpr int kMinusInfinity = std::numeric_limits<int>::min();

template <class K>
class RationalFunction {
 public:
  using field_type = K;
  using polynomial_type = Polynomial<K>;

  RationalFunction() : den_(K(1)) {}
  RationalFunction(long c) : num_(K(c)), den_(K(1)) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(int c) : num_(K(static_cast<long>(c))), den_(K(1)) {}  // NOLINT
  RationalFunction(K c) : num_(std::move(c)), den_(K(1)) {}  // NOLINT
  RationalFunction(Polynomial<K> p) : num_(std::move(p)), den_(K(1)) {}  // NOLINT

  /// Builds num/den in canonical form; a zero denominator is malformed input.
  RationalFunction(Polynomial<K> num, Polynomial<K> den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw MalformedInput("rational function with zero denominator");
    reduce();
  }

  static RationalFunction variable() { return RationalFunction(Polynomial<K>::variable()); }

  const Polynomial<K>& numerator() const { return num_; }
  const Polynomial<K>& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return den_.degree() == 0 && num_.degree() <= 0; }
  /// Constant value; only meaningful when is_constant().
  K constant_value() const { return num_.coefficient(0); }

  /// deg(numerator) - deg(denominator); kMinusInfinity for zero.
  int asymptotic_degree() const { return is_zero() ? kMinusInfinity : num_.degree() - den_.degree(); }

  RationalFunction operator-() const { return RationalFunction(-num_, den_, canonical_tag{}); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return add(a, b, false);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return add(a, b, true);
  }

  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_polynomial() && b.is_polynomial()) return RationalFunction(a.num_ * b.num_, b.den_, canonical_tag{});
    // Cross-cancellation keeps the result reduced when both inputs are.
    Polynomial<K> g1 = gcd(a.num_, b.den_);
    Polynomial<K> g2 = gcd(b.num_, a.den_);
    Polynomial<K> n = exact_quotient(a.num_, g1) * exact_quotient(b.num_, g2);
    Polynomial<K> d = exact_quotient(a.den_, g2) * exact_quotient(b.den_, g1);
    return RationalFunction(std::move(n), std::move(d), canonical_tag{});
  }

  RationalFunction reciprocal() const {
    if (is_zero()) throw DomainError("reciprocal of the zero rational function");
    const K& lead = num_.leading();
    if (lead == K(1)) return RationalFunction(den_, num_, canonical_tag{});
    K inv = K(1) / lead;
    Polynomial<K> d = num_.scaled(inv);
    return RationalFunction(den_.scaled(inv), std::move(d), canonical_tag{});
  }

  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw DomainError("rational function division by zero");
    return a * b.reciprocal();
  }

  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  /// r(x + s). Shifting preserves coprimality and monicity.
  RationalFunction shifted(const K& s) const {
    if (s.is_zero()) return *this;
    return RationalFunction(num_.shifted(s), den_.shifted(s), canonical_tag{});
  }

  /// Exact value at a point of K; throws PoleError if the denominator vanishes.
  template <class Fmt>
  K evaluate(const K& x, Fmt&& describe_point) const {
    K d = den_.evaluate(x);
    if (d.is_zero()) throw PoleError(describe_point(x), "rational function evaluation");
    return num_.evaluate(x) / d;
  }
  K evaluate(const K& x) const {
    return evaluate(x, [](const K&) { return std::string("<point>"); });
  }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  struct canonical_tag {};
  RationalFunction(Polynomial<K> num, Polynomial<K> den, canonical_tag)
      : num_(std::move(num)), den_(std::move(den)) {
    if (num_.is_zero()) den_ = Polynomial<K>(K(1));
  }

  void reduce() {
    if (num_.is_zero()) {
      den_ = Polynomial<K>(K(1));
      return;
    }
    if (den_.degree() > 0) {
      Polynomial<K> g = gcd(num_, den_);
      if (!g.is_one()) {
        num_ = exact_quotient(num_, g);
        den_ = exact_quotient(den_, g);
      }
    }
    const K& lead = den_.leading();
    if (!(lead == K(1))) {
      K inv = K(1) / lead;
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }

  static RationalFunction add(const RationalFunction& a, const RationalFunction& b, bool subtract) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return subtract ? -b : b;
    if (a.is_polynomial() && b.is_polynomial())
      return RationalFunction(subtract ? a.num_ - b.num_ : a.num_ + b.num_, a.den_, canonical_tag{});
    const Polynomial<K>& bn = b.num_;
    if (a.den_ == b.den_) {
      Polynomial<K> n = subtract ? a.num_ - bn : a.num_ + bn;
      return RationalFunction(std::move(n), a.den_);
    }
    // Henrici: only the common part of the denominators can cancel.
    Polynomial<K> g = gcd(a.den_, b.den_);
    if (g.is_one()) {
      Polynomial<K> n = a.num_ * b.den_;
      Polynomial<K> m = bn * a.den_;
      return RationalFunction(subtract ? n - m : n + m, a.den_ * b.den_, canonical_tag{});
    }
    Polynomial<K> ad = exact_quotient(a.den_, g);
    Polynomial<K> bd = exact_quotient(b.den_, g);
    Polynomial<K> n = subtract ? a.num_ * bd - bn * ad : a.num_ * bd + bn * ad;
    if (n.is_zero()) return {};
    Polynomial<K> g2 = gcd(n, g);
    if (!g2.is_one()) {
      n = exact_quotient(n, g2);
      g = exact_quotient(g, g2);
    }
    return RationalFunction(std::move(n), g * ad * bd, canonical_tag{});
  }

  Polynomial<K> num_;
  Polynomial<K> den_;
};

/// Canonical form of num/den.
template <class K>
RationalFunction<K> normalize(Polynomial<K> num, Polynomial<K> den) {
  return RationalFunction<K>(std::move(num), std::move(den));
}

/// Mathematical equality, decided by normalizing the difference.
template <class K>
bool equals(const RationalFunction<K>& a, const RationalFunction<K>& b) {
  return (a - b).is_zero();
}

template <class K>
int asymptotic_degree(const RationalFunction<K>& r) {
  return r.asymptotic_degree();
}

}  // namespace liecomp::exact
