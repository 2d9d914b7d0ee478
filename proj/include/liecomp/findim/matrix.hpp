#pragma once

// Dense matrices over a field with Gaussian elimination. Exact scalars use
// exact pivot tests; floating point scalars use partial pivoting and an
// absolute tolerance.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "liecomp/errors.hpp"
#include "liecomp/findim/scalar.hpp"

namespace liecomp::findim {

template <class S>
class Matrix {
 public:
  using scalar_type = S;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, S{}) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }
  static Matrix column(const std::vector<S>& v) {
    Matrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  S& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const S& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  std::vector<S> col(std::size_t c) const {
    std::vector<S> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  bool is_square() const { return rows_ == cols_; }

  Matrix operator-() const {
    Matrix r = *this;
    for (auto& x : r.a_) x = -x;
    return r;
  }
  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S& x = a(i, k);
        if (x == S{}) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (b(k, j) == S{}) continue;
          r(i, j) += x * b(k, j);
        }
      }
    return r;
  }
  Matrix scaled(const S& s) const {
    Matrix r = *this;
    for (auto& x : r.a_) x = x * s;
    return r;
  }

  S trace() const {
    S t{};
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  /// Largest entry magnitude.
  double max_abs() const {
    double m = 0;
    for (const auto& x : a_) m = std::max(m, ScalarTraits<S>::magnitude(x));
    return m;
  }
  bool is_zero(double tol = 0) const {
    return std::all_of(a_.begin(), a_.end(), [&](const S& x) { return ScalarTraits<S>::negligible(x, tol); });
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> a_;
};

template <class S>
Matrix<S> commutator(const Matrix<S>& a, const Matrix<S>& b) {
  return a * b - b * a;
}

/// Kronecker product a ⊗ b.
template <class S>
Matrix<S> kron(const Matrix<S>& a, const Matrix<S>& b) {
  Matrix<S> r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == S{}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return r;
}

/// Block diagonal a ⊕ b.
template <class S>
Matrix<S> direct_sum(const Matrix<S>& a, const Matrix<S>& b) {
  Matrix<S> r(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, a.cols() + j) = b(i, j);
  return r;
}

template <class S>
Matrix<S> hconcat(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.rows() != b.rows() && a.cols() != 0 && b.cols() != 0) throw DimensionMismatch("hconcat row mismatch");
  std::size_t rows = a.cols() ? a.rows() : b.rows();
  Matrix<S> r(rows, a.cols() + b.cols());
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
  }
  return r;
}

/// Reduced row echelon form in place; returns the pivot columns.
template <class S>
std::vector<std::size_t> rref(Matrix<S>& m, double tol = 0) {
  using T = ScalarTraits<S>;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    std::size_t best = m.rows();
    double best_mag = 0;
    for (std::size_t r = row; r < m.rows(); ++r) {
      if (T::negligible(m(r, c), tol)) continue;
      if constexpr (T::exact) {
        best = r;
        break;
      } else {
        double mag = T::magnitude(m(r, c));
        if (mag > best_mag) {
          best_mag = mag;
          best = r;
        }
      }
    }
    if (best == m.rows()) continue;
    if (best != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(best, j), m(row, j));
    S inv = S(1) / m(row, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || T::negligible(m(r, c), tol)) continue;
      S f = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (m(row, j) == S{}) continue;
        m(r, j) -= f * m(row, j);
      }
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

template <class S>
std::size_t rank(Matrix<S> m, double tol = 0) {
  return rref(m, tol).size();
}

/// Basis of the null space {x : m x = 0}, one column per basis vector.
template <class S>
Matrix<S> nullspace(Matrix<S> m, double tol = 0) {
  auto pivots = rref(m, tol);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::size_t free_count = m.cols() - pivots.size();
  Matrix<S> basis(m.cols(), free_count);
  std::size_t k = 0;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    basis(f, k) = S(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], k) = -m(r, f);
    ++k;
  }
  return basis;
}

/// Solves a x = b for a full-column-rank a; nullopt when b is not in the
/// column space.
template <class S>
std::optional<std::vector<S>> solve(const Matrix<S>& a, const std::vector<S>& b, double tol = 0) {
  if (b.size() != a.rows()) throw DimensionMismatch("solve: right-hand side size");
  Matrix<S> aug = hconcat(a, Matrix<S>::column(b));
  auto pivots = rref(aug, tol);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  std::vector<S> x(a.cols(), S{});
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
  return x;
}

}  // namespace liecomp::findim
