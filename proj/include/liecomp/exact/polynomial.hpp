#pragma once

// Dense univariate polynomials over a coefficient type K.
//
// K needs value semantics, a default constructor producing zero, K(1),
// ring operators and is_zero(). divmod/gcd additionally require K to be a
// field (operator/ on nonzero elements).

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <utility>
#include <vector>

#include "liecomp/errors.hpp"

namespace liecomp::exact {

template <class K>
class Polynomial {
 public:
  using coefficient_type = K;

  Polynomial() = default;
  Polynomial(K constant) {  // NOLINT(google-explicit-constructor)
    if (!constant.is_zero()) c_.push_back(std::move(constant));
  }
  explicit Polynomial(std::vector<K> ascending) : c_(std::move(ascending)) { trim(); }

  static Polynomial variable() { return Polynomial(std::vector<K>{K{}, K(1)}); }
  static Polynomial monomial(K c, int degree) {
    if (c.is_zero()) return {};
    std::vector<K> v(static_cast<std::size_t>(degree) + 1);
    v.back() = std::move(c);
    return Polynomial(std::move(v));
  }
  /// x + a
  static Polynomial linear(K a) { return Polynomial(std::vector<K>{std::move(a), K(1)}); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == K(1); }

  const std::vector<K>& coefficients() const { return c_; }
  K coefficient(int i) const {
    return (i < 0 || i >= static_cast<int>(c_.size())) ? K{} : c_[static_cast<std::size_t>(i)];
  }
  const K& leading() const {
    assert(!c_.empty());
    return c_.back();
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  Polynomial& operator+=(const Polynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.c_.size() == 1) return b.scaled(a.c_[0]);
    if (b.c_.size() == 1) return a.scaled(b.c_[0]);
    std::vector<K> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (b.c_[j].is_zero()) continue;
        r[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return Polynomial(std::move(r));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const K& s) const {
    if (s.is_zero()) return {};
    Polynomial r = *this;
    for (auto& x : r.c_) x *= s;
    r.trim();
    return r;
  }

  K evaluate(const K& x) const {
    K acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Evaluates with a point of another type U (coefficients are mapped by
  /// `lift`); used to substitute an inner field element into a polynomial.
  template <class U, class Lift>
  U evaluate_as(const U& x, Lift&& lift) const {
    U acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + lift(*it);
    return acc;
  }

  /// p(x + s), by Horner's scheme on (x + s).
  Polynomial shifted(const K& s) const {
    if (s.is_zero() || c_.size() <= 1) return *this;
    Polynomial r;
    Polynomial lin = linear(s);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * lin + Polynomial(*it);
    return r;
  }

  template <class F>
  auto map_coefficients(F&& f) const {
    using U = std::decay_t<decltype(f(std::declval<const K&>()))>;
    std::vector<U> v;
    v.reserve(c_.size());
    for (const auto& x : c_) v.push_back(f(x));
    return Polynomial<U>(std::move(v));
  }

  Polynomial monic() const {
    if (is_zero() || leading() == K(1)) return *this;
    K inv = K(1) / leading();
    Polynomial r = scaled(inv);
    r.c_.back() = K(1);
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<K> c_;
};

/// Euclidean division over a field: a = q*b + r with deg r < deg b.
template <class K>
std::pair<Polynomial<K>, Polynomial<K>> divmod(const Polynomial<K>& a, const Polynomial<K>& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial<K>{}, a};
  std::vector<K> rem = a.coefficients();
  const int db = b.degree();
  const auto& bc = b.coefficients();
  const bool b_monic = b.leading() == K(1);
  K inv_lead = b_monic ? K(1) : K(1) / b.leading();
  std::vector<K> quo(static_cast<std::size_t>(a.degree() - db + 1));
  for (int i = a.degree(); i >= db; --i) {
    K& top = rem[static_cast<std::size_t>(i)];
    if (top.is_zero()) continue;
    K q = b_monic ? top : top * inv_lead;
    for (int j = 0; j < db; ++j) {
      if (bc[static_cast<std::size_t>(j)].is_zero()) continue;
      rem[static_cast<std::size_t>(i - db + j)] -= q * bc[static_cast<std::size_t>(j)];
    }
    top = K{};
    quo[static_cast<std::size_t>(i - db)] = std::move(q);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial<K>(std::move(quo)), Polynomial<K>(std::move(rem))};
}

/// Exact quotient; throws if b does not divide a.
template <class K>
Polynomial<K> exact_quotient(const Polynomial<K>& a, const Polynomial<K>& b) {
  if (b.is_one()) return a;
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw DomainError("polynomial division is not exact");
  return q;
}

/// Customization point for the greatest common divisor. The primary
/// template runs the monic Euclidean algorithm over the field K; coefficient
/// fields with a cheaper route specialize it.
template <class K>
struct PolynomialGcd {
  static Polynomial<K> apply(Polynomial<K> a, Polynomial<K> b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.degree() == 0 || b.degree() == 0) return Polynomial<K>(K(1));
    if (a.degree() < b.degree()) std::swap(a, b);
    a = a.monic();
    b = b.monic();
    while (!b.is_zero()) {
      auto r = divmod(a, b).second;
      a = std::move(b);
      b = r.monic();
    }
    return a;
  }
};

/// Monic gcd (the zero polynomial only when both inputs are zero).
template <class K>
Polynomial<K> gcd(const Polynomial<K>& a, const Polynomial<K>& b) {
  return PolynomialGcd<K>::apply(a, b);
}

}  // namespace liecomp::exact
