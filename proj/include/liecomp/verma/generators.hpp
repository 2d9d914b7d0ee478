#pragma once

// Operator families on the Verma module V_h realized on polynomials in z,
// with ξ = z d/dz acting on z^n as multiplication by n.
//
//   L_0 = ξ + h,  L_{-1} = z,  L_1 = (ξ + 2h) d/dz,
//   L_k    = (ξ + (k+1)h) (d/dz)^k                                (k >= 0)
//   L_{-k} = z^k (ξ + (k+1)h) / ((ξ+2h)(ξ+2h+1)...(ξ+2h+k-1))      (k >= 1)
//   F_i    = (d/dz)^i,  F_{-i} = z^i / ((ξ+2h)...(ξ+2h+i-1))
//
// L_k realizes the Witt letter e_k, F_i the abelian generator f_i.

#include <compare>
#include <optional>
#include <string>

#include "liecomp/exact/tower.hpp"
#include "liecomp/shiftop/shift_operator.hpp"

namespace liecomp::verma {

using exact::Qh;
using exact::Qhn;
using exact::Rational;
using shiftop::ShiftOperator;

enum class Family { e, f };

struct Generator {
  Family family = Family::e;
  int index = 0;

  static Generator e(int k) { return {Family::e, k}; }
  static Generator f(int k) { return {Family::f, k}; }

  /// Involution e_k* = e_{-k}, f_k* = f_{-k}.
  Generator star() const { return {family, -index}; }
  /// Z-grading: deg e_k = deg f_k = k.
  int degree() const { return index; }

  std::string to_string() const { return std::string(family == Family::e ? "e_" : "f_") + std::to_string(index); }

  friend auto operator<=>(const Generator&, const Generator&) = default;
};

/// The highest weight: either the formal symbol h or a rational value.
class HighestWeight {
 public:
  static HighestWeight symbolic() { return HighestWeight(); }
  static HighestWeight value(Rational v) {
    HighestWeight w;
    w.value_ = std::move(v);
    return w;
  }
  /// "h" for the formal symbol, otherwise a rational literal "p/q".
  static HighestWeight parse(std::string_view text) {
    if (text == "h" || text == "symbolic") return symbolic();
    return value(Rational::parse(text));
  }

  bool is_symbolic() const { return !value_.has_value(); }
  /// Rational and positive: the module carries a positive definite form.
  bool unitarizable() const { return value_ && value_->sign() > 0; }
  const std::optional<Rational>& rational() const { return value_; }

  Qh scalar() const { return value_ ? Qh(*value_) : Qh::variable(); }
  std::string to_string() const { return value_ ? value_->to_string() : "h"; }

 private:
  HighestWeight() = default;
  std::optional<Rational> value_;
};

namespace detail {

/// n (n-1) ... (n-k+1)
inline Qhn falling_factorial(int k) {
  const Qhn n = exact::symbol_n();
  Qhn r(1);
  for (int j = 0; j < k; ++j) r = r * (n - Qhn(j));
  return r;
}

/// (n+2h)(n+2h+1)...(n+2h+k-1)
inline Qhn raising_denominator(int k, const Qh& h) {
  const Qhn base = exact::symbol_n() + Qhn(Qh(2) * h);
  Qhn r(1);
  for (int j = 0; j < k; ++j) r = r * (base + Qhn(j));
  return r;
}

}  // namespace detail

/// Spin-2 tensor operator L_k.
inline ShiftOperator op_L(int k, const HighestWeight& weight) {
  const Qh h = weight.scalar();
  const Qhn n = exact::symbol_n();
  if (k >= 0) {
    Qhn c = (n - Qhn(k) + Qhn(Qh(k + 1) * h)) * detail::falling_factorial(k);
    return ShiftOperator::component(-k, std::move(c));
  }
  const int m = -k;
  Qhn c = (n + Qhn(Qh(m + 1) * h)) / detail::raising_denominator(m, h);
  return ShiftOperator::component(m, std::move(c));
}

/// Spin-1 tensor operator F_k.
inline ShiftOperator op_F(int k, const HighestWeight& weight) {
  if (k >= 0) return ShiftOperator::component(-k, detail::falling_factorial(k));
  const int m = -k;
  return ShiftOperator::component(m, Qhn(1) / detail::raising_denominator(m, weight.scalar()));
}

/// T(X) for a single generator.
inline ShiftOperator represent(const Generator& g, const HighestWeight& h) {
  return g.family == Family::e ? op_L(g.index, h) : op_F(g.index, h);
}

}  // namespace liecomp::verma
