#pragma once

// Reference implementations used only by the tests. Everything here works on
// concrete numbers: polynomials in z with mpq_class coefficients at a fixed
// rational highest weight, and complex double matrices for so(3). Nothing
// calls into the library, so agreement with it is evidence, not tautology.

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Poly = std::map<int, Q>;  // exponent -> coefficient, no zero entries

inline Q q(long num, long den = 1) {
  Q r(num, den);
  r.canonicalize();
  return r;
}

inline Poly monomial(int n, Q c = 1) {
  Poly p;
  if (c != 0) p[n] = c;
  return p;
}

inline void put(Poly& p, int k, const Q& c) {
  Q& slot = p[k];
  slot += c;
  if (slot == 0) p.erase(k);
}

inline Poly plus(const Poly& a, const Poly& b, const Q& sb = 1) {
  Poly r = a;
  for (const auto& [k, c] : b) put(r, k, sb * c);
  return r;
}

inline Poly times(const Poly& a, const Q& s) {
  Poly r;
  if (s == 0) return r;
  for (const auto& [k, c] : a) r[k] = c * s;
  return r;
}

// d/dz
inline Poly dz(const Poly& p) {
  Poly r;
  for (const auto& [k, c] : p)
    if (k != 0) put(r, k - 1, c * k);
  return r;
}

inline Poly mul_z(const Poly& p, int times = 1) {
  Poly r;
  for (const auto& [k, c] : p) r[k + times] = c;
  return r;
}

// f(ξ) with ξ z^k = k z^k: multiply z^k by (k + a)
inline Poly xi_plus(const Poly& p, const Q& a) {
  Poly r;
  for (const auto& [k, c] : p) put(r, k, c * (k + a));
  return r;
}

// (ξ + a)^{-1}
inline Poly xi_plus_inverse(const Poly& p, const Q& a) {
  Poly r;
  for (const auto& [k, c] : p) {
    Q d = k + a;
    if (d == 0) throw std::domain_error("xi + a vanishes");
    r[k] = c / d;
  }
  return r;
}

// L_0 = ξ + h, L_{-1} = z, L_1 = (ξ + 2h) ∂,
// L_k = (ξ + (k+1)h) ∂^k, L_{-k} = z^k (ξ + (k+1)h) / ((ξ+2h)...(ξ+2h+k-1))
inline Poly L(int k, const Q& h, Poly p) {
  if (k >= 0) {
    for (int i = 0; i < k; ++i) p = dz(p);
    return xi_plus(p, (k + 1) * h);
  }
  const int m = -k;
  for (int j = 0; j < m; ++j) p = xi_plus_inverse(p, 2 * h + j);
  p = xi_plus(p, (m + 1) * h);
  return mul_z(p, m);
}

// F_i = ∂^i, F_{-i} = z^i / ((ξ+2h)...(ξ+2h+i-1))
inline Poly F(int k, const Q& h, Poly p) {
  if (k >= 0) {
    for (int i = 0; i < k; ++i) p = dz(p);
    return p;
  }
  const int m = -k;
  for (int j = 0; j < m; ++j) p = xi_plus_inverse(p, 2 * h + j);
  return mul_z(p, m);
}

struct Letter {
  char family;  // 'e' or 'f'
  int index;
};

inline Poly act(const Letter& g, const Q& h, const Poly& p) {
  return g.family == 'e' ? L(g.index, h, p) : F(g.index, h, p);
}

/// Word X_1 X_2 ... X_m applied to p (rightmost letter acts first).
inline Poly act_word(const std::vector<Letter>& w, const Q& h, Poly p) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) p = act(*it, h, p);
  return p;
}

inline Poly commutator(const Letter& x, const Letter& y, const Q& h, const Poly& p) {
  return plus(act(x, h, act(y, h, p)), act(y, h, act(x, h, p)), -1);
}

/// Structure constants computed from the operators themselves would be
/// circular; these are the abstract ones of the extended Witt algebra.
inline Poly bracket_image(const Letter& x, const Letter& y, const Q& h, const Poly& p) {
  const int i = x.index, j = y.index;
  if (x.family == 'e' && y.family == 'e') return times(L(i + j, h, p), i - j);
  if (x.family == 'f' && y.family == 'f') return {};
  if (x.family == 'e') return times(F(i + j, h, p), -j);
  return times(F(i + j, h, p), i);
}

/// <z^n, z^n> from L_{-1}^* = L_1: w(n) = [L_1 z^n]_{n-1} w(n-1).
inline Q weight(int n, const Q& h) {
  Q w = 1;
  for (int m = 1; m <= n; ++m) {
    Poly p = L(1, h, monomial(m));
    w *= p.count(m - 1) ? p.at(m - 1) : Q(0);
  }
  return w;
}

/// <A z^m, z^n> for a letter, straight from the operator and the weights.
inline Q matrix_element(const Letter& g, int m, int n, const Q& h) {
  Poly p = act(g, h, monomial(m));
  auto it = p.find(n);
  return it == p.end() ? Q(0) : it->second * weight(n, h);
}

// ---- random rational operators -------------------------------------------

/// One factor (n + a h + b) with a >= 1, b >= 0: positive on n >= 0, h > 0.
struct LinearFactor {
  int a;
  int b;
  std::string text() const { return "(n + " + std::to_string(a) + "*h + " + std::to_string(b) + ")"; }
  Q at(int n, const Q& h) const { return n + a * h + b; }
};

/// A component c(n) = k * n(n-1)...(n-f+1) * Π num / Π den, with f = max(0, -shift).
struct RandomComponent {
  int shift = 0;
  Q scale = 1;
  std::vector<LinearFactor> num, den;

  int falling() const { return shift < 0 ? -shift : 0; }

  std::string text() const {
    std::string s = "(" + scale.get_str() + ")";
    for (int j = 0; j < falling(); ++j) s += "*(n - " + std::to_string(j) + ")";
    for (const auto& f : num) s += "*" + f.text();
    if (!den.empty()) {
      s += "/(";
      for (std::size_t i = 0; i < den.size(); ++i) s += (i ? "*" : "") + den[i].text();
      s += ")";
    }
    return s;
  }

  Q at(int n, const Q& h) const {
    Q v = scale;
    for (int j = 0; j < falling(); ++j) v *= n - j;
    for (const auto& f : num) v *= f.at(n, h);
    for (const auto& f : den) v /= f.at(n, h);
    return v;
  }
};

struct RandomOperator {
  std::vector<RandomComponent> components;  // distinct shifts

  Poly apply(const Poly& p, const Q& h) const {
    Poly r;
    for (const auto& [n, c] : p)
      for (const auto& comp : components) {
        Q v = comp.at(n, h);
        if (v == 0) continue;
        if (n + comp.shift < 0) throw std::domain_error("negative exponent");
        put(r, n + comp.shift, c * v);
      }
    return r;
  }
};

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  LinearFactor factor() { return {uniform(1, 3), uniform(0, 4)}; }

  RandomComponent component(int shift) {
    RandomComponent c;
    c.shift = shift;
    do {
      c.scale = q(uniform(-5, 5), uniform(1, 4));
    } while (c.scale == 0);
    for (int i = uniform(0, 2); i > 0; --i) c.num.push_back(factor());
    for (int i = uniform(0, 2); i > 0; --i) c.den.push_back(factor());
    return c;
  }

  RandomOperator shift_operator(int max_components = 3, int max_shift = 2) {
    RandomOperator op;
    std::map<int, bool> used;
    for (int i = uniform(1, max_components); i > 0; --i) {
      int d = uniform(-max_shift, max_shift);
      if (used[d]) continue;
      used[d] = true;
      op.components.push_back(component(d));
    }
    return op;
  }

  /// A univariate rational function of x with no poles at x >= 0, as text,
  /// together with its numerator and denominator degrees.
  struct Univariate {
    std::string text;
    int num_degree;
    int den_degree;
  };
  Univariate univariate() {
    Univariate u{"", 0, 0};
    int p = uniform(0, 3);
    std::string num = std::to_string(uniform(1, 6));
    for (int i = 0; i < p; ++i) num += "*(x + " + std::to_string(uniform(0, 5)) + ")";
    int d = uniform(0, 3);
    std::string den = "1";
    for (int i = 0; i < d; ++i) den += "*(x + " + std::to_string(uniform(1, 5)) + ")";
    u.text = "(" + num + ")/(" + den + ")";
    u.num_degree = p;
    u.den_degree = d;
    return u;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// ---- so(3) with doubles ----------------------------------------------------

using Complex = std::complex<double>;
using CMat = std::vector<std::vector<Complex>>;

inline CMat zeros(std::size_t n) { return CMat(n, std::vector<Complex>(n)); }
inline CMat eye(std::size_t n) {
  CMat m = zeros(n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline CMat mul(const CMat& a, const CMat& b) {
  CMat r = zeros(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < a.size(); ++k)
      for (std::size_t j = 0; j < a.size(); ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

inline CMat lin(const CMat& a, Complex s, const CMat& b, Complex t) {
  CMat r = zeros(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) r[i][j] = s * a[i][j] + t * b[i][j];
  return r;
}

inline CMat comm(const CMat& a, const CMat& b) { return lin(mul(a, b), 1, mul(b, a), -1); }

inline double dist(const CMat& a, const CMat& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) m = std::max(m, std::abs(a[i][j] - b[i][j]));
  return m;
}

inline CMat kron(const CMat& a, const CMat& b) {
  const std::size_t n = a.size(), m = b.size();
  CMat r = zeros(n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l) r[i * m + k][j * m + l] = a[i][j] * b[k][l];
  return r;
}

/// Anti-Hermitian X, Y, Z = -i J_x, -i J_y, -i J_z from the textbook spin-j
/// angular momentum matrices; [X,Y] = Z cyclically.
inline std::vector<CMat> spin(unsigned two_j) {
  const std::size_t n = two_j + 1;
  const double j = two_j / 2.0;
  CMat jp = zeros(n), jz = zeros(n);
  for (std::size_t a = 0; a < n; ++a) {
    double m = j - static_cast<double>(a);
    jz[a][a] = m;
    if (a > 0) jp[a - 1][a] = std::sqrt(j * (j + 1) - m * (m + 1));
  }
  CMat jm = zeros(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) jm[a][b] = std::conj(jp[b][a]);
  const Complex mi(0, -1);
  CMat jx = lin(jp, 0.5, jm, 0.5);
  CMat jy = lin(jp, Complex(0, -0.5), jm, Complex(0, 0.5));
  return {lin(jx, mi, jx, 0), lin(jy, mi, jy, 0), lin(jz, mi, jz, 0)};
}

}  // namespace oracle
