#pragma once

// Finite-dimensional Lie composites over Q: a space with marked subspaces,
// each carrying its own Lie bracket, and the axioms relating them.

#include <cstddef>
#include <queue>
#include <string>
#include <vector>

#include "liecomp/errors.hpp"
#include "liecomp/findim/matrix.hpp"
#include "liecomp/report.hpp"

namespace liecomp::findim {

using QMatrix = Matrix<Rational>;
using QVector = std::vector<Rational>;

/// Bracket data of one marked subspace. The inclusion columns are a basis of
/// the subspace in ambient coordinates; [b_i, b_j] = Σ_k c(k, i, j) b_k.
class SubspaceAlgebra {
 public:
  SubspaceAlgebra() = default;
  SubspaceAlgebra(std::string name, QMatrix inclusion)
      : name_(std::move(name)), inclusion_(std::move(inclusion)),
        constants_(inclusion_.cols() * inclusion_.cols() * inclusion_.cols()) {}

  const std::string& name() const { return name_; }
  const QMatrix& inclusion() const { return inclusion_; }
  std::size_t dimension() const { return inclusion_.cols(); }
  std::size_t ambient_dimension() const { return inclusion_.rows(); }

  Rational& c(std::size_t k, std::size_t i, std::size_t j) { return constants_[index(k, i, j)]; }
  const Rational& c(std::size_t k, std::size_t i, std::size_t j) const { return constants_[index(k, i, j)]; }

  /// Sets [b_i, b_j] = Σ coeffs and the antisymmetric partner.
  void set_bracket(std::size_t i, std::size_t j, const QVector& coeffs) {
    for (std::size_t k = 0; k < dimension(); ++k) {
      c(k, i, j) = coeffs[k];
      c(k, j, i) = -coeffs[k];
    }
  }

  /// Bracket of two vectors given in subspace coordinates.
  QVector bracket(const QVector& x, const QVector& y) const {
    const std::size_t d = dimension();
    QVector r(d);
    for (std::size_t i = 0; i < d; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < d; ++j) {
        if (y[j].is_zero()) continue;
        Rational xy = x[i] * y[j];
        for (std::size_t k = 0; k < d; ++k)
          if (!c(k, i, j).is_zero()) r[k] += xy * c(k, i, j);
      }
    }
    return r;
  }

  /// Ambient coordinates of a subspace vector.
  QVector embed(const QVector& local) const { return (inclusion_ * QMatrix::column(local)).col(0); }

  /// Subspace coordinates of an ambient vector, or nullopt if it lies outside.
  std::optional<QVector> coordinates(const QVector& ambient) const { return solve(inclusion_, ambient); }

  /// Throws MalformedInput unless the invariants of a Lie subalgebra hold.
  void validate() const {
    const std::size_t d = dimension();
    if (d < 2) throw MalformedInput("subspace " + name_ + " has dimension below 2");
    if (rank(inclusion_) != d) throw MalformedInput("subspace " + name_ + ": inclusion is not of full column rank");
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j)
          if (c(k, i, j) != -c(k, j, i))
            throw MalformedInput("subspace " + name_ + ": structure constants are not antisymmetric");
    auto unit = [d](std::size_t i) {
      QVector v(d);
      v[i] = Rational(1);
      return v;
    };
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j)
        for (std::size_t k = j + 1; k < d; ++k) {
          QVector a = bracket(unit(i), bracket(unit(j), unit(k)));
          QVector b = bracket(unit(j), bracket(unit(k), unit(i)));
          QVector e = bracket(unit(k), bracket(unit(i), unit(j)));
          for (std::size_t t = 0; t < d; ++t)
            if (!(a[t] + b[t] + e[t]).is_zero())
              throw MalformedInput("subspace " + name_ + ": Jacobi identity fails");
        }
  }

 private:
  std::size_t index(std::size_t k, std::size_t i, std::size_t j) const {
    const std::size_t d = dimension();
    return (k * d + i) * d + j;
  }

  std::string name_;
  QMatrix inclusion_;
  std::vector<Rational> constants_;
};

class FinDimComposite {
 public:
  FinDimComposite() = default;
  FinDimComposite(std::vector<std::string> basis_names, std::vector<SubspaceAlgebra> subspaces)
      : basis_names_(std::move(basis_names)), subspaces_(std::move(subspaces)) {
    validate();
  }

  std::size_t dimension() const { return basis_names_.size(); }
  const std::vector<std::string>& basis_names() const { return basis_names_; }
  const std::vector<SubspaceAlgebra>& subspaces() const { return subspaces_; }
  const SubspaceAlgebra& subspace(std::size_t i) const { return subspaces_.at(i); }

  /// Readable name of an ambient vector: a basis label for unit vectors,
  /// otherwise the coordinate tuple.
  std::string label(const QVector& v) const {
    std::size_t nonzero = 0, at = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) {
        ++nonzero;
        at = i;
      }
    if (nonzero == 1 && v[at].is_one()) return basis_names_[at];
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].to_string();
    return s + ")";
  }

 private:
  void validate() const {
    if (subspaces_.empty()) throw MalformedInput("composite needs at least one subspace");
    for (const auto& s : subspaces_) {
      if (s.ambient_dimension() != dimension())
        throw MalformedInput("subspace " + s.name() + " does not live in the ambient space");
      s.validate();
    }
  }

  std::vector<std::string> basis_names_;
  std::vector<SubspaceAlgebra> subspaces_;
};

/// Basis (columns, ambient coordinates) of the intersection of two subspaces.
inline QMatrix intersect_subspaces(const FinDimComposite& c, std::size_t i, std::size_t j) {
  const QMatrix& a = c.subspace(i).inclusion();
  const QMatrix& b = c.subspace(j).inclusion();
  QMatrix kernel = nullspace(hconcat(a, -b));
  QMatrix alpha(a.cols(), kernel.cols());
  for (std::size_t r = 0; r < a.cols(); ++r)
    for (std::size_t k = 0; k < kernel.cols(); ++k) alpha(r, k) = kernel(r, k);
  return a * alpha;
}

/// Same column space, tested by rank.
inline bool same_span(const QMatrix& a, const QMatrix& b) {
  std::size_t ra = rank(a), rb = rank(b);
  return ra == rb && rank(hconcat(a, b)) == ra;
}

inline std::string pair_subject(const FinDimComposite& c, std::size_t i, std::size_t j) {
  return c.subspace(i).name() + " ∩ " + c.subspace(j).name();
}

/// Empty when the brackets of subspaces i and j induce the same bracket on
/// their intersection; otherwise a witness pair and what went wrong.
inline std::string compatibility_failure(const FinDimComposite& c, std::size_t i, std::size_t j) {
  const auto& si = c.subspace(i);
  const auto& sj = c.subspace(j);
  QMatrix meet = intersect_subspaces(c, i, j);
  std::vector<QVector> in_i, in_j;
  for (std::size_t k = 0; k < meet.cols(); ++k) {
    in_i.push_back(*si.coordinates(meet.col(k)));
    in_j.push_back(*sj.coordinates(meet.col(k)));
  }
  for (std::size_t p = 0; p < meet.cols(); ++p)
    for (std::size_t q = p + 1; q < meet.cols(); ++q) {
      QVector bi = si.embed(si.bracket(in_i[p], in_i[q]));
      QVector bj = sj.embed(sj.bracket(in_j[p], in_j[q]));
      std::string witness = "[" + c.label(meet.col(p)) + "," + c.label(meet.col(q)) + "]";
      if (!sj.coordinates(bi)) return witness + " under " + si.name() + " leaves " + sj.name();
      if (!si.coordinates(bj)) return witness + " under " + sj.name() + " leaves " + si.name();
      if (bi != bj) return witness + ": " + c.label(bi) + " vs " + c.label(bj);
    }
  return {};
}

/// Induced brackets on every pairwise intersection exist on both sides and agree.
inline CheckReport check_compatibility(const FinDimComposite& c) {
  CheckReport rep("compatibility");
  rep.param("subspaces", std::to_string(c.subspaces().size()));
  const std::size_t n = c.subspaces().size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (same_span(c.subspace(i).inclusion(), c.subspace(j).inclusion()))
        rep.add(pair_subject(c, i, j), Verdict::info, "duplicate subspaces");
      std::string failure = compatibility_failure(c, i, j);
      auto& item = rep.add(pair_subject(c, i, j), failure.empty() ? Verdict::pass : Verdict::fail,
                           "intersection dimension " + std::to_string(intersect_subspaces(c, i, j).cols()));
      if (!failure.empty()) item.residual = failure;
    }
  return rep;
}

/// The subspaces together span the ambient space.
inline bool check_dense(const FinDimComposite& c) {
  QMatrix all;
  for (const auto& s : c.subspaces()) all = hconcat(all, s.inclusion());
  return rank(all) == c.dimension();
}

/// The graph on subspaces with an edge for every nonzero intersection is connected.
inline bool check_connected(const FinDimComposite& c) {
  const std::size_t n = c.subspaces().size();
  std::vector<std::vector<bool>> edge(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edge[i][j] = edge[j][i] = intersect_subspaces(c, i, j).cols() > 0;
  std::vector<bool> seen(n, false);
  std::queue<std::size_t> todo;
  todo.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!todo.empty()) {
    std::size_t u = todo.front();
    todo.pop();
    for (std::size_t v = 0; v < n; ++v)
      if (edge[u][v] && !seen[v]) {
        seen[v] = true;
        ++reached;
        todo.push(v);
      }
  }
  return reached == n;
}

/// Compatibility plus density and connectedness as report items.
inline CheckReport check_axioms(const FinDimComposite& c) {
  CheckReport rep = check_compatibility(c);
  rep.name = "composite-axioms";
  rep.add("dense", check_dense(c) ? Verdict::pass : Verdict::fail, "subspaces span the space");
  rep.add("connected", check_connected(c) ? Verdict::pass : Verdict::fail,
          "nonzero-intersection graph is connected");
  return rep;
}

}  // namespace liecomp::findim
