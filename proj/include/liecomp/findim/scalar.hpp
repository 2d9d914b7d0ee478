#pragma once

// Scalars for finite-dimensional linear algebra: exact Q, exact Q(i), and
// double with an absolute tolerance.

#include <cmath>
#include <complex>
#include <string>
#include <string_view>

#include "liecomp/exact/rational.hpp"

namespace liecomp::findim {

using exact::Rational;

/// Gaussian rational a + b i with a, b in Q.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(int re) : re_(re) {}   // NOLINT
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    if (im_.is_zero() && o.im_.is_zero()) {
      re_ *= o.re_;
      return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    Rational n = o.norm();
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
  }
  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

  /// "a", "b*i", "a+b*i", "a-b*i" with rational a, b ("i" and "-i" allowed).
  std::string to_string() const {
    if (im_.is_zero()) return re_.to_string();
    std::string im;
    Rational a = exact::abs(im_);
    im = a.is_one() ? "i" : a.to_string() + "*i";
    if (re_.is_zero()) return (im_.sign() < 0 ? "-" : "") + im;
    return re_.to_string() + (im_.sign() < 0 ? "-" : "+") + im;
  }

  static GaussianRational parse(std::string_view s) {
    std::string t;
    for (char c : s)
      if (c != ' ' && c != '\t') t.push_back(c);
    if (t.empty()) throw MalformedInput("empty scalar literal");
    if (t.back() != 'i') return GaussianRational(Rational::parse(t));
    t.pop_back();
    if (!t.empty() && t.back() == '*') t.pop_back();
    // split real and imaginary parts at the last sign that is not leading
    std::size_t split = std::string::npos;
    for (std::size_t k = t.size(); k-- > 1;) {
      if (t[k] == '+' || t[k] == '-') {
        split = k;
        break;
      }
    }
    std::string re = split == std::string::npos ? "0" : t.substr(0, split);
    std::string im = split == std::string::npos ? t : t.substr(split);
    if (im.empty() || im == "+") im = "1";
    if (im == "-") im = "-1";
    return {Rational::parse(re), Rational::parse(im)};
  }

 private:
  Rational re_;
  Rational im_;
};

/// Per-scalar policy used by the generic linear algebra.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static bool negligible(const Rational& x, double) { return x.is_zero(); }
  static double magnitude(const Rational& x) { return std::fabs(x.to_double()); }
  static std::string to_string(const Rational& x) { return x.to_string(); }
};

template <>
struct ScalarTraits<GaussianRational> {
  static constexpr bool exact = true;
  static bool negligible(const GaussianRational& x, double) { return x.is_zero(); }
  static double magnitude(const GaussianRational& x) { return std::sqrt(x.norm().to_double()); }
  static std::string to_string(const GaussianRational& x) { return x.to_string(); }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static bool negligible(double x, double tol) { return std::fabs(x) <= tol; }
  static double magnitude(double x) { return std::fabs(x); }
  static std::string to_string(double x) { return std::to_string(x); }
};

template <>
struct ScalarTraits<std::complex<double>> {
  static constexpr bool exact = false;
  static bool negligible(const std::complex<double>& x, double tol) { return std::abs(x) <= tol; }
  static double magnitude(const std::complex<double>& x) { return std::abs(x); }
  static std::string to_string(const std::complex<double>& x) {
    return std::to_string(x.real()) + (x.imag() < 0 ? "" : "+") + std::to_string(x.imag()) + "*i";
  }
};

/// Embeds a rational into the scalar type S.
template <class S>
S from_rational(const Rational& r) {
  if constexpr (std::is_same_v<S, double>) {
    return r.to_double();
  } else if constexpr (std::is_same_v<S, std::complex<double>>) {
    return {r.to_double(), 0.0};
  } else {
    return S(r);
  }
}

}  // namespace liecomp::findim
