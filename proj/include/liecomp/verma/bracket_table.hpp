#pragma once

// Abstract brackets of the extended Witt algebra:
//   [e_i, e_j] = (i - j) e_{i+j},  [f_i, f_j] = 0,  [e_i, f_j] = -j f_{i+j}.
// The e-f entry is the relation the explicit operators satisfy inside each
// half of the composite; see printed_ef_relation for the alternative form
// [e_i, f_j] = j f_j, kept only so reports can flag where it disagrees.

#include <map>
#include <utility>
#include <vector>

#include "liecomp/verma/generators.hpp"

namespace liecomp::verma {

/// Finite integer combination of generators; no zero coefficients.
class Combination {
 public:
  Combination() = default;
  Combination(Generator g, long c) {
    if (c != 0) terms_.emplace(g, c);
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Generator, long>& terms() const { return terms_; }

  Combination& add(Generator g, long c) {
    if (c == 0) return *this;
    long& v = terms_[g];
    v += c;
    if (v == 0) terms_.erase(g);
    return *this;
  }
  Combination scaled(long s) const {
    Combination r;
    if (s == 0) return r;
    for (const auto& [g, c] : terms_) r.terms_.emplace(g, c * s);
    return r;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [g, c] : terms_) {
      if (!s.empty()) s += c < 0 ? " - " : " + ";
      else if (c < 0) s += "-";
      long a = c < 0 ? -c : c;
      if (a != 1) s += std::to_string(a) + "*";
      s += g.to_string();
    }
    return s;
  }

  friend bool operator==(const Combination&, const Combination&) = default;

 private:
  std::map<Generator, long> terms_;
};

inline Combination bracket(const Generator& x, const Generator& y) {
  const int i = x.index, j = y.index;
  if (x.family == Family::e && y.family == Family::e) return {Generator::e(i + j), static_cast<long>(i - j)};
  if (x.family == Family::f && y.family == Family::f) return {};
  if (x.family == Family::e) return {Generator::f(i + j), -static_cast<long>(j)};
  // [f_i, e_j] = -[e_j, f_i] = i f_{i+j}
  return {Generator::f(i + j), static_cast<long>(i)};
}

inline Combination bracket(const Combination& a, const Generator& y) {
  Combination r;
  for (const auto& [g, c] : a.terms()) {
    const Combination b = bracket(g, y);
    for (const auto& [g2, c2] : b.terms()) r.add(g2, c * c2);
  }
  return r;
}

/// [e_i, f_j] = j f_j, the printed alternative to the table entry.
inline Combination printed_ef_relation(int i, int j) {
  (void)i;
  return {Generator::f(j), static_cast<long>(j)};
}

inline ShiftOperator represent(const Combination& a, const HighestWeight& h) {
  ShiftOperator r;
  for (const auto& [g, c] : a.terms()) r += represent(g, h).scaled(Qh(c));
  return r;
}

/// A_{XY} = [T(X), T(Y)] - T([X, Y]).
inline ShiftOperator deviation(const Generator& x, const Generator& y, const HighestWeight& h) {
  return shiftop::commutator(represent(x, h), represent(y, h)) - represent(bracket(x, y), h);
}

}  // namespace liecomp::verma
