#pragma once

// An abstract Lie algebra given by structure constants, with the Killing
// form and its inertia (used to certify the isomorphism type of a real form).

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "liecomp/findim/matrix.hpp"

namespace liecomp::findim {

template <class S>
class LieTable {
 public:
  explicit LieTable(std::size_t dim) : dim_(dim), c_(dim * dim * dim, S{}) {}

  std::size_t dimension() const { return dim_; }
  S& c(std::size_t k, std::size_t i, std::size_t j) { return c_[(k * dim_ + i) * dim_ + j]; }
  const S& c(std::size_t k, std::size_t i, std::size_t j) const { return c_[(k * dim_ + i) * dim_ + j]; }

  /// Sets [x_i, x_j] = Σ coeffs and [x_j, x_i] = -Σ coeffs.
  void set_bracket(std::size_t i, std::size_t j, const std::vector<S>& coeffs) {
    for (std::size_t k = 0; k < dim_; ++k) {
      c(k, i, j) = coeffs[k];
      c(k, j, i) = -coeffs[k];
    }
  }

  std::vector<S> bracket(const std::vector<S>& x, const std::vector<S>& y) const {
    std::vector<S> r(dim_, S{});
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x[i] == S{}) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (y[j] == S{}) continue;
        S xy = x[i] * y[j];
        for (std::size_t k = 0; k < dim_; ++k)
          if (!(c(k, i, j) == S{})) r[k] += xy * c(k, i, j);
      }
    }
    return r;
  }

  bool antisymmetric(double tol = 0) const {
    for (std::size_t k = 0; k < dim_; ++k)
      for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i; j < dim_; ++j)
          if (!ScalarTraits<S>::negligible(c(k, i, j) + c(k, j, i), tol)) return false;
    return true;
  }

  /// Largest Jacobiator entry over all basis triples (zero means the identity holds).
  double jacobi_defect() const {
    double worst = 0;
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j)
        for (std::size_t k = j + 1; k < dim_; ++k) {
          auto a = bracket(unit(i), bracket(unit(j), unit(k)));
          auto b = bracket(unit(j), bracket(unit(k), unit(i)));
          auto e = bracket(unit(k), bracket(unit(i), unit(j)));
          for (std::size_t t = 0; t < dim_; ++t) worst = std::max(worst, ScalarTraits<S>::magnitude(a[t] + b[t] + e[t]));
        }
    return worst;
  }

  /// ad(x_i) as a matrix: column j holds [x_i, x_j].
  Matrix<S> ad(std::size_t i) const {
    Matrix<S> m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) m(k, j) = c(k, i, j);
    return m;
  }

  /// B(x_i, x_j) = tr(ad x_i ad x_j).
  Matrix<S> killing_form() const {
    std::vector<Matrix<S>> ads;
    for (std::size_t i = 0; i < dim_; ++i) ads.push_back(ad(i));
    Matrix<S> k(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i; j < dim_; ++j) k(i, j) = k(j, i) = (ads[i] * ads[j]).trace();
    return k;
  }

 private:
  std::vector<S> unit(std::size_t i) const {
    std::vector<S> v(dim_, S{});
    v[i] = S(1);
    return v;
  }

  std::size_t dim_;
  std::vector<S> c_;
};

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  std::size_t rank() const { return positive + negative; }
  std::string to_string() const {
    return "(" + std::to_string(positive) + "+, " + std::to_string(negative) + "-, " + std::to_string(zero) + "0)";
  }
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Sylvester inertia of a symmetric matrix over an ordered field, by
/// symmetric (congruence) elimination.
template <class S>
Inertia inertia(Matrix<S> a, double tol = 0) {
  using T = ScalarTraits<S>;
  const std::size_t n = a.rows();
  if (!a.is_square()) throw DimensionMismatch("inertia of a non-square matrix");
  Inertia in;
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::optional<std::size_t> p;
    for (std::size_t i = 0; i < n && !p; ++i)
      if (!done[i] && !T::negligible(a(i, i), tol)) p = i;
    if (!p) {
      // Zero diagonal: x_i -> x_i + x_j creates the pivot 2 a_ij.
      for (std::size_t i = 0; i < n && !p; ++i)
        for (std::size_t j = 0; j < n && !p; ++j)
          if (!done[i] && !done[j] && i != j && !T::negligible(a(i, j), tol)) {
            for (std::size_t k = 0; k < n; ++k) a(i, k) += a(j, k);
            for (std::size_t k = 0; k < n; ++k) a(k, i) += a(k, j);
            p = i;
          }
    }
    if (!p) break;
    const std::size_t i = *p;
    done[i] = true;
    S pivot = a(i, i);
    if (pivot < S{}) ++in.negative;
    else ++in.positive;
    for (std::size_t r = 0; r < n; ++r) {
      if (done[r] || T::negligible(a(r, i), tol)) continue;
      S f = a(r, i) / pivot;
      for (std::size_t k = 0; k < n; ++k) a(r, k) -= f * a(i, k);
    }
    for (std::size_t r = 0; r < n; ++r)
      if (!done[r]) a(i, r) = a(r, i) = S{};
  }
  in.zero = n - in.rank();
  return in;
}

}  // namespace liecomp::findim
