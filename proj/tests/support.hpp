#pragma once

// Glue between library values and the oracle's concrete numbers.

#include "liecomp/exact/expression.hpp"
#include "liecomp/shiftop/shift_operator.hpp"
#include "oracles.hpp"

namespace support {

using liecomp::exact::Qh;
using liecomp::exact::Rational;

inline oracle::Q to_q(const Rational& r) { return r.value(); }
inline Rational from_q(const oracle::Q& q) { return Rational(q); }

/// Library operator applied to z^n, then h = h0 substituted.
inline oracle::Poly on_monomial(const liecomp::shiftop::ShiftOperator& a, int n, const oracle::Q& h0) {
  oracle::Poly out;
  for (const auto& [k, c] : a.apply_to_monomial(n)) {
    Rational v = liecomp::exact::evaluate_at(c, from_q(h0));
    if (!v.is_zero()) out[k] = to_q(v);
  }
  return out;
}

inline oracle::Poly on_poly(const liecomp::shiftop::ShiftOperator& a, const oracle::Poly& p, const oracle::Q& h0) {
  oracle::Poly out;
  for (const auto& [n, c] : p) out = oracle::plus(out, oracle::times(on_monomial(a, n, h0), c));
  return out;
}

inline liecomp::shiftop::ShiftOperator from_oracle(const oracle::RandomOperator& op) {
  liecomp::shiftop::ShiftOperator r;
  for (const auto& c : op.components)
    r += liecomp::shiftop::ShiftOperator::component(c.shift, liecomp::exact::parse_qhn(c.text()));
  return r;
}

}  // namespace support
