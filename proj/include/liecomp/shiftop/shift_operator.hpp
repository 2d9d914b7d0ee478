#pragma once

// Graded shift operators on polynomials in z: finite sums of components
// acting as z^n -> c(n) z^{n+d} with c in Q(h)(n).
//
// Because each coefficient is a rational function of n, equality of two
// operators on all of the module is a finite rational-function identity.

#include <map>
#include <utility>
#include <vector>

#include "liecomp/errors.hpp"
#include "liecomp/exact/expression.hpp"
#include "liecomp/exact/tower.hpp"

namespace liecomp::shiftop {

using exact::Qh;
using exact::Qhn;
using exact::Rational;

class ShiftOperator {
 public:
  using ComponentMap = std::map<int, Qhn>;

  ShiftOperator() = default;

  static ShiftOperator component(int shift, Qhn coeff) {
    ShiftOperator op;
    if (!coeff.is_zero()) op.c_.emplace(shift, std::move(coeff));
    return op;
  }
  static ShiftOperator identity() { return component(0, Qhn(1)); }

  /// Components keyed by shift; never holds a zero coefficient.
  const ComponentMap& components() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// Coefficient at a shift (zero if absent).
  Qhn coefficient(int shift) const {
    auto it = c_.find(shift);
    return it == c_.end() ? Qhn{} : it->second;
  }

  ShiftOperator operator-() const {
    ShiftOperator r;
    for (const auto& [d, c] : c_) r.c_.emplace(d, -c);
    return r;
  }
  ShiftOperator& operator+=(const ShiftOperator& o) { return accumulate(o, false); }
  ShiftOperator& operator-=(const ShiftOperator& o) { return accumulate(o, true); }
  friend ShiftOperator operator+(ShiftOperator a, const ShiftOperator& b) { return a += b; }
  friend ShiftOperator operator-(ShiftOperator a, const ShiftOperator& b) { return a -= b; }

  /// Multiplication by a scalar of Q(h).
  ShiftOperator scaled(const Qh& s) const {
    if (s.is_zero()) return {};
    ShiftOperator r;
    Qhn f(s);
    for (const auto& [d, c] : c_) r.c_.emplace(d, c * f);
    return r;
  }

  /// Expansion of the operator applied to z^n, as (exponent, coefficient)
  /// pairs in increasing exponent order.
  std::vector<std::pair<int, Qh>> apply_to_monomial(int n) const {
    std::vector<std::pair<int, Qh>> out;
    for (const auto& [d, c] : c_) {
      Qh v = exact::evaluate_at(c, Qh(n));
      if (v.is_zero()) continue;
      if (n + d < 0)
        throw NegativeExponentError("component with shift " + std::to_string(d) + " sends z^" + std::to_string(n) +
                                    " to a negative power");
      out.emplace_back(n + d, std::move(v));
    }
    return out;
  }

  friend bool operator==(const ShiftOperator& a, const ShiftOperator& b) { return a.c_ == b.c_; }

 private:
  ShiftOperator& accumulate(const ShiftOperator& o, bool subtract) {
    for (const auto& [d, c] : o.c_) {
      auto it = c_.find(d);
      if (it == c_.end()) {
        c_.emplace(d, subtract ? -c : c);
        continue;
      }
      it->second = subtract ? it->second - c : it->second + c;
      if (it->second.is_zero()) c_.erase(it);
    }
    return *this;
  }

  ComponentMap c_;
};

/// Operator product (A∘B)(z^n) = A(B(z^n)).
/// Component pairs contribute (d_A + d_B, c_A(n + d_B) c_B(n)).
inline ShiftOperator compose(const ShiftOperator& a, const ShiftOperator& b) {
  ShiftOperator r;
  for (const auto& [db, cb] : b.components()) {
    for (const auto& [da, ca] : a.components()) {
      r += ShiftOperator::component(da + db, ca.shifted(Qh(db)) * cb);
    }
  }
  return r;
}

inline ShiftOperator commutator(const ShiftOperator& a, const ShiftOperator& b) {
  return compose(a, b) - compose(b, a);
}

/// Equality on all of the module; coefficients compared via exact::equals.
inline bool equals(const ShiftOperator& a, const ShiftOperator& b) {
  if (a.components().size() != b.components().size()) return false;
  auto ib = b.components().begin();
  for (const auto& [d, c] : a.components()) {
    if (ib->first != d || !exact::equals(c, ib->second)) return false;
    ++ib;
  }
  return true;
}

inline ShiftOperator add(const ShiftOperator& a, const ShiftOperator& b) { return a + b; }
inline ShiftOperator scale(const ShiftOperator& a, const Qh& s) { return a.scaled(s); }

}  // namespace liecomp::shiftop
