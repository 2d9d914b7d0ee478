#pragma once

#include <algorithm>
#include <string>
#include <string_view>

#include "liecomp/shiftop/shift_operator.hpp"

namespace liecomp::shiftop {

/// Operator classes ordered by containment:
/// zero ⊂ trace-class ⊂ hilbert-schmidt ⊂ bounded ⊂ unbounded (everything).
/// Compact operators are not a separate class here: for graded shift
/// operators with rational coefficients compactness and the
/// Hilbert-Schmidt property coincide at integer growth exponents.
enum class OperatorClass { zero = 0, trace_class = 1, hilbert_schmidt = 2, bounded = 3, unbounded = 4 };

inline std::string_view to_string(OperatorClass c) {
  switch (c) {
    case OperatorClass::zero: return "zero";
    case OperatorClass::trace_class: return "trace-class";
    case OperatorClass::hilbert_schmidt: return "hilbert-schmidt";
    case OperatorClass::bounded: return "bounded";
    case OperatorClass::unbounded: return "unbounded";
  }
  return "unknown";
}

inline bool within(OperatorClass c, OperatorClass bound) { return static_cast<int>(c) <= static_cast<int>(bound); }

/// Exponent g with |<e_{n+d}, A e_n>| ~ C n^g in the orthonormal basis
/// e_n = z^n / sqrt(w(n)); w(n+d)/w(n) ~ n^{2d}, so g = deg(c) + d.
inline int growth_exponent(int shift, const Qhn& coeff) { return coeff.asymptotic_degree() + shift; }

inline OperatorClass class_of_exponent(int g) {
  if (g <= -2) return OperatorClass::trace_class;
  if (g == -1) return OperatorClass::hilbert_schmidt;
  if (g == 0) return OperatorClass::bounded;
  return OperatorClass::unbounded;
}

/// Least class containing the operator, for generic positive h.
/// A single band is a weighted shift whose singular values are the moduli
/// of its entries, so the per-component class is exact; the whole operator
/// takes the worst component.
inline OperatorClass classify(const ShiftOperator& a) {
  OperatorClass worst = OperatorClass::zero;
  for (const auto& [d, c] : a.components()) {
    OperatorClass k = class_of_exponent(growth_exponent(d, c));
    if (static_cast<int>(k) > static_cast<int>(worst)) worst = k;
  }
  return worst;
}

}  // namespace liecomp::shiftop
