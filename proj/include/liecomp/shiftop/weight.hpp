#pragma once

#include "liecomp/shiftop/shift_operator.hpp"

namespace liecomp::shiftop {

/// Squared norms of the monomials z^n in the highest weight module:
/// w(0) = 1, w(n) = n (2h + n - 1) w(n - 1).
class WeightFunction {
 public:
  explicit WeightFunction(Qh h) : h_(std::move(h)) {}

  const Qh& highest_weight() const { return h_; }

  Qh operator()(int n) const {
    if (n < 0) throw DomainError("weight of a negative exponent");
    Qh w(1);
    for (int m = 1; m <= n; ++m) w = w * (Qh(m) * (Qh(2) * h_ + Qh(m - 1)));
    return w;
  }

  /// w(k) / w(k - d) as a rational function of k.
  Qhn ratio(int d) const {
    const Qhn k = exact::symbol_n();
    const Qhn two_h = Qhn(Qh(2) * h_);
    Qhn r(1);
    if (d > 0) {
      for (int t = 0; t < d; ++t) r = r * ((k - Qhn(t)) * (two_h + k - Qhn(t + 1)));
    } else {
      for (int t = 1; t <= -d; ++t) r = r / ((k + Qhn(t)) * (two_h + k + Qhn(t - 1)));
    }
    return r;
  }

 private:
  Qh h_;
};

inline Qh shapovalov_weight(int n, const Qh& h) { return WeightFunction(h)(n); }

/// Formal adjoint for <z^m, z^n> = δ_mn w(n) (h real):
/// (d, c) -> (-d, c~) with c~(k) = c(k - d) w(k) / w(k - d).
inline ShiftOperator adjoint(const ShiftOperator& a, const WeightFunction& w) {
  ShiftOperator r;
  for (const auto& [d, c] : a.components()) r += ShiftOperator::component(-d, c.shifted(Qh(-d)) * w.ratio(d));
  return r;
}

}  // namespace liecomp::shiftop
