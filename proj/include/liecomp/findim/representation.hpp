#pragma once

// Linear maps from a composite to matrices, and the representation axiom:
// restricted to every marked subspace the map is a Lie algebra homomorphism.

#include <cstddef>
#include <iomanip>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include "liecomp/findim/composite.hpp"

namespace liecomp::findim {

/// One m×m matrix per ambient basis vector; T(x) = Σ x_b T(v_b).
template <class S>
class FinDimRep {
 public:
  using Mat = Matrix<S>;

  FinDimRep() = default;
  FinDimRep(std::size_t space_dim, std::vector<Mat> matrices)
      : space_dim_(space_dim), matrices_(std::move(matrices)) {
    for (const auto& m : matrices_)
      if (m.rows() != space_dim_ || m.cols() != space_dim_)
        throw DimensionMismatch("representation matrix is not " + std::to_string(space_dim_) + "x" +
                                std::to_string(space_dim_));
  }

  static FinDimRep zero(std::size_t basis_count, std::size_t space_dim) {
    return FinDimRep(space_dim, std::vector<Mat>(basis_count, Mat(space_dim, space_dim)));
  }

  std::size_t space_dim() const { return space_dim_; }
  std::size_t basis_count() const { return matrices_.size(); }
  const std::vector<Mat>& matrices() const { return matrices_; }
  const Mat& matrix(std::size_t b) const { return matrices_.at(b); }
  Mat& matrix(std::size_t b) { return matrices_.at(b); }

  /// T applied to an ambient vector with rational coordinates.
  Mat operator()(const QVector& x) const {
    if (x.size() != matrices_.size()) throw DimensionMismatch("vector size does not match the composite");
    Mat r(space_dim_, space_dim_);
    for (std::size_t b = 0; b < x.size(); ++b)
      if (!x[b].is_zero()) r += matrices_[b].scaled(from_rational<S>(x[b]));
    return r;
  }

  friend bool operator==(const FinDimRep&, const FinDimRep&) = default;

 private:
  std::size_t space_dim_ = 0;
  std::vector<Mat> matrices_;
};

/// Largest entry magnitude of a defect, for report residuals.
inline std::string magnitude_string(double v) {
  std::ostringstream os;
  os << "max|entry|=" << std::setprecision(6) << v;
  return os.str();
}

/// For every subspace and every pair of its basis vectors,
/// [T(x), T(y)] - T([x, y]) vanishes (exactly, or entrywise within tol).
template <class S>
CheckReport check_representation(const FinDimComposite& c, const FinDimRep<S>& t, double tol = 0) {
  if (t.basis_count() != c.dimension())
    throw DimensionMismatch("representation has " + std::to_string(t.basis_count()) + " matrices for a " +
                            std::to_string(c.dimension()) + "-dimensional composite");
  CheckReport rep("representation");
  rep.param("space_dim", std::to_string(t.space_dim()));
  if constexpr (!ScalarTraits<S>::exact) rep.param("tolerance", std::to_string(tol));
  for (const auto& s : c.subspaces()) {
    const std::size_t d = s.dimension();
    std::vector<Matrix<S>> images;
    for (std::size_t i = 0; i < d; ++i) images.push_back(t(s.inclusion().col(i)));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j) {
        QVector ei(d), ej(d);
        ei[i] = Rational(1);
        ej[j] = Rational(1);
        QVector target = s.embed(s.bracket(ei, ej));
        Matrix<S> defect = commutator(images[i], images[j]) - t(target);
        bool ok = defect.is_zero(tol);
        std::string subject = s.name() + ": [" + c.label(s.inclusion().col(i)) + "," +
                              c.label(s.inclusion().col(j)) + "] = " + c.label(target);
        auto& item = rep.add(subject, ok ? Verdict::pass : Verdict::fail);
        if (!ok || !ScalarTraits<S>::exact) item.residual = magnitude_string(defect.max_abs());
      }
  }
  return rep;
}

/// x ↦ T1(x) ⊗ 1 + 1 ⊗ T2(x).
template <class S>
FinDimRep<S> tensor_product(const FinDimRep<S>& a, const FinDimRep<S>& b) {
  if (a.basis_count() != b.basis_count()) throw DimensionMismatch("tensor product of reps of different composites");
  auto ia = Matrix<S>::identity(a.space_dim());
  auto ib = Matrix<S>::identity(b.space_dim());
  std::vector<Matrix<S>> ms;
  for (std::size_t k = 0; k < a.basis_count(); ++k) ms.push_back(kron(a.matrix(k), ib) + kron(ia, b.matrix(k)));
  return FinDimRep<S>(a.space_dim() * b.space_dim(), std::move(ms));
}

template <class S>
FinDimRep<S> direct_sum(const FinDimRep<S>& a, const FinDimRep<S>& b) {
  if (a.basis_count() != b.basis_count()) throw DimensionMismatch("direct sum of reps of different composites");
  std::vector<Matrix<S>> ms;
  for (std::size_t k = 0; k < a.basis_count(); ++k) ms.push_back(direct_sum(a.matrix(k), b.matrix(k)));
  return FinDimRep<S>(a.space_dim() + b.space_dim(), std::move(ms));
}

/// Dimension of {X : [X, M] = 0 for every M}. Each generator cuts the
/// current solution space down, so no system larger than m² × (current
/// dimension) is ever formed.
template <class S>
std::size_t commutant_dimension(const std::vector<Matrix<S>>& gens, std::size_t m, double tol = 0) {
  const std::size_t mm = m * m;
  // Columns of `basis` are the current solutions, flattened row-major.
  Matrix<S> basis = Matrix<S>::identity(mm);
  auto unflatten = [m](const Matrix<S>& b, std::size_t col) {
    Matrix<S> x(m, m);
    for (std::size_t r = 0; r < m * m; ++r) x(r / m, r % m) = b(r, col);
    return x;
  };
  for (const auto& g : gens) {
    if (basis.cols() == 0) break;
    if (g.is_zero(tol)) continue;
    Matrix<S> system(mm, basis.cols());
    for (std::size_t k = 0; k < basis.cols(); ++k) {
      Matrix<S> br = commutator(unflatten(basis, k), g);
      for (std::size_t r = 0; r < mm; ++r) system(r, k) = br(r / m, r % m);
    }
    basis = basis * nullspace(system, tol);
  }
  return basis.cols();
}

template <class S>
std::size_t commutant_dimension(const FinDimRep<S>& t, double tol = 0) {
  return commutant_dimension(t.matrices(), t.space_dim(), tol);
}

/// Commutant of dimension one. The commutant dimension does not change under
/// field extension, so this is irreducibility over the algebraic closure.
template <class S>
bool is_irreducible(const FinDimRep<S>& t, double tol = 0) {
  return t.space_dim() > 0 && commutant_dimension(t, tol) == 1;
}

template <class S>
std::string irreducibility_caveat() {
  std::string field;
  if constexpr (std::is_same_v<S, Rational>) field = "Q";
  else if constexpr (std::is_same_v<S, GaussianRational>) field = "Q(i)";
  else if constexpr (std::is_same_v<S, double>) field = "R (with tolerance)";
  else field = "C (with tolerance)";
  return "commutant computed over " + field +
         "; dimension 1 means absolutely irreducible, a larger commutant does not rule out "
         "irreducibility over a field that is not algebraically closed";
}

}  // namespace liecomp::findim
