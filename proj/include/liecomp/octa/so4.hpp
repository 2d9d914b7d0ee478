#pragma once

// so(4) = so(3) ⊕ so(3) realized on the octahedron: each vertex is a signed
// sum a_i ± b_j of generators of the two commuting factors. From a composite
// representation, the opposite-vertex commutators and trace-normalized
// vertex operators recover an so(4) representation.

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>

#include "liecomp/findim/lie_table.hpp"
#include "liecomp/findim/representation.hpp"
#include "liecomp/octa/octahedron.hpp"
#include "liecomp/octa/so3.hpp"

namespace liecomp::octa {

using findim::FinDimRep;
using findim::LieTable;
using findim::Matrix;
using findim::QVector;
using findim::Rational;
using findim::ScalarTraits;

/// ± generator of one so(3) factor (index 0..2).
struct FactorTerm {
  int index = 0;
  int sign = 1;
  friend bool operator==(const FactorTerm&, const FactorTerm&) = default;
};

/// Vertex = left.sign * a_{left.index} + right.sign * b_{right.index}.
struct VertexCombination {
  FactorTerm left;
  FactorTerm right;
  friend bool operator==(const VertexCombination&, const VertexCombination&) = default;
};

using VertexTable = std::array<VertexCombination, kVertexCount>;

/// Thrown when no signed assignment satisfies every face; it would mean an
/// orientation bug in the face list.
struct SearchFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// so(3) ⊕ so(3) on the basis a1, a2, a3, b1, b2, b3.
inline LieTable<Rational> so3_sum_table() {
  LieTable<Rational> t(6);
  for (std::size_t block : {0u, 3u})
    for (std::size_t i = 0; i < 3; ++i) {
      QVector target(6);
      target[block + (i + 2) % 3] = Rational(1);
      t.set_bracket(block + i, block + (i + 1) % 3, target);
    }
  return t;
}

inline QVector combination_vector(const VertexCombination& v) {
  QVector x(6);
  x[v.left.index] = Rational(v.left.sign);
  x[3 + v.right.index] = Rational(v.right.sign);
  return x;
}

namespace detail {

inline bool face_holds(const LieTable<Rational>& lie, const VertexTable& t, const Face& f) {
  for (std::size_t i = 0; i < 3; ++i)
    if (lie.bracket(combination_vector(t[f[i]]), combination_vector(t[f[(i + 1) % 3]])) !=
        combination_vector(t[f[(i + 2) % 3]]))
      return false;
  return true;
}

inline bool opposite_commute(const LieTable<Rational>& lie, const VertexTable& t, Vertex u, Vertex v) {
  for (const auto& x : lie.bracket(combination_vector(t[u]), combination_vector(t[v])))
    if (!x.is_zero()) return false;
  return true;
}

inline bool search(const LieTable<Rational>& lie, VertexTable& t, std::size_t next) {
  // Constraints that only involve already-assigned vertices.
  for (const auto& f : kFaces)
    if (std::max({f[0], f[1], f[2]}) + 1 == next && !face_holds(lie, t, f)) return false;
  for (auto [u, v] : kOppositePairs)
    if (std::max(u, v) + 1 == next && !opposite_commute(lie, t, u, v)) return false;
  if (next == kVertexCount) {
    // Faithful: the six vertices must span so(3) ⊕ so(3).
    findim::QMatrix m(6, kVertexCount);
    for (std::size_t v = 0; v < kVertexCount; ++v) {
      auto x = combination_vector(t[v]);
      for (std::size_t r = 0; r < 6; ++r) m(r, v) = x[r];
    }
    return findim::rank(m) == 6;
  }
  for (int li = 0; li < 3; ++li)
    for (int ls : {1, -1})
      for (int ri = 0; ri < 3; ++ri)
        for (int rs : {1, -1}) {
          t[next] = {{li, ls}, {ri, rs}};
          if (search(lie, t, next + 1)) return true;
        }
  return false;
}

}  // namespace detail

/// Whether a vertex table realizes every face relation and commuting opposite
/// pairs (linear independence is not required here).
inline bool realizes_octahedron(const VertexTable& t) {
  const auto lie = so3_sum_table();
  for (const auto& f : kFaces)
    if (!detail::face_holds(lie, t, f)) return false;
  for (auto [u, v] : kOppositePairs)
    if (!detail::opposite_commute(lie, t, u, v)) return false;
  return true;
}

/// First faithful assignment in lexicographic order (index, then + before -).
inline std::optional<VertexTable> search_vertex_table() {
  VertexTable t{};
  if (detail::search(so3_sum_table(), t, 0)) return t;
  return std::nullopt;
}

/// The first solution of search_vertex_table, fixed once.
inline constexpr VertexTable kVertexTable = {{
    {{0, 1}, {0, 1}},    // A = a1 + b1
    {{1, 1}, {1, 1}},    // B = a2 + b2
    {{2, 1}, {2, 1}},    // C = a3 + b3
    {{1, 1}, {1, -1}},   // D = a2 - b2
    {{2, 1}, {2, -1}},   // E = a3 - b3
    {{0, -1}, {0, 1}},   // F = -a1 + b1
}};

/// The octahedron algebra itself on the basis A..F: the face relations plus
/// commuting opposite pairs. Every pair of vertices is covered exactly once.
inline LieTable<Rational> octahedron_lie_table() {
  LieTable<Rational> t(kVertexCount);
  for (const auto& f : kFaces)
    for (std::size_t i = 0; i < 3; ++i) {
      QVector target(kVertexCount);
      target[f[(i + 2) % 3]] = Rational(1);
      t.set_bracket(f[i], f[(i + 1) % 3], target);
    }
  return t;
}

/// Rank and signature of the octahedron algebra's Killing form, which
/// identify it as the compact real form so(3) ⊕ so(3) ≅ so(4).
inline CheckReport so4_certificate() {
  CheckReport rep("so4-certificate");
  auto t = octahedron_lie_table();
  rep.add("antisymmetry", t.antisymmetric() ? Verdict::pass : Verdict::fail);
  rep.add("jacobi", t.jacobi_defect() == 0 ? Verdict::pass : Verdict::fail);
  auto in = findim::inertia(t.killing_form());
  rep.add("killing rank", in.rank() == 6 ? Verdict::pass : Verdict::fail, "rank " + std::to_string(in.rank()));
  rep.add("killing signature", in.negative == 6 ? Verdict::pass : Verdict::fail,
          "inertia " + in.to_string() + ", negative definite as for so(3)+so(3)");
  auto sum = findim::inertia(so3_sum_table().killing_form());
  rep.add("reference so(3)+so(3)", in == sum ? Verdict::pass : Verdict::fail, "inertia " + sum.to_string());
  return rep;
}

inline FinDimRep<GaussianRational> so4_composite_rep(unsigned two_j1, unsigned two_j2) {
  if (!realizes_octahedron(kVertexTable)) throw SearchFailure("vertex table does not realize the octahedron faces");
  const So3Triple left = so3_irrep(two_j1);
  const So3Triple right = so3_irrep(two_j2);
  const auto il = CMatrix::identity(two_j1 + 1);
  const auto ir = CMatrix::identity(two_j2 + 1);
  std::vector<CMatrix> ms;
  for (const auto& v : kVertexTable) {
    CMatrix l = findim::kron(left[v.left.index], ir).scaled(GaussianRational(v.left.sign));
    CMatrix r = findim::kron(il, right[v.right.index]).scaled(GaussianRational(v.right.sign));
    ms.push_back(l + r);
  }
  return FinDimRep<GaussianRational>((two_j1 + 1) * (two_j2 + 1), std::move(ms));
}

template <class S>
struct So4Extraction {
  std::map<std::string, S> lambdas;
  std::map<std::string, S> central_values;
  FinDimRep<S> shifted;
  CheckReport verdict{"extract-so4"};
  bool all_lambdas_zero = true;

  bool pass() const { return verdict.pass(); }

  ordered_json to_json() const {
    ordered_json j;
    ordered_json l = ordered_json::object();
    for (const auto& [k, v] : lambdas) l[k] = ScalarTraits<S>::to_string(v);
    ordered_json c = ordered_json::object();
    for (const auto& [k, v] : central_values) c[k] = ScalarTraits<S>::to_string(v);
    j["lambdas"] = l;
    j["central_values"] = c;
    j["pass"] = pass();
    j["details"] = verdict.to_json();
    return j;
  }
};

namespace detail {

/// Real scalars for the Killing form: Q for exact input, double otherwise.
template <class S>
using RealOf = std::conditional_t<ScalarTraits<S>::exact, Rational, double>;

template <class S>
std::optional<RealOf<S>> real_value(const S& x, double tol) {
  if constexpr (std::is_same_v<S, GaussianRational>) {
    if (!x.is_real()) return std::nullopt;
    return x.real();
  } else if constexpr (std::is_same_v<S, std::complex<double>>) {
    if (std::fabs(x.imag()) > tol) return std::nullopt;
    return x.real();
  } else {
    return x;
  }
}

template <class S>
std::vector<S> flatten(const Matrix<S>& m) {
  std::vector<S> v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
  return v;
}

}  // namespace detail

/// Steps: precondition (composite representation), centrality of the three
/// opposite-pair commutators, their scalar values when irreducible, the
/// trace shifts, the full so(4) table for the shifted operators, and the
/// span of the shifted operators as a compact semisimple algebra.
template <class S>
So4Extraction<S> extract_so4(const FinDimRep<S>& t, bool irreducible_hint, double tol = 0) {
  using T = ScalarTraits<S>;
  So4Extraction<S> out;
  CheckReport& rep = out.verdict;
  rep.param("space_dim", std::to_string(t.space_dim()));
  rep.param("irreducible_hint", irreducible_hint ? "true" : "false");
  if constexpr (!T::exact) rep.param("tolerance", std::to_string(tol));

  const auto oct = build_octahedron();
  CheckReport pre = findim::check_representation(oct, t, tol);
  if (!pre.pass()) {
    auto& item = rep.add("precondition: composite representation", Verdict::fail,
                         std::to_string(pre.count(Verdict::fail)) + " face relations fail");
    item.residual = pre.first_failure()->subject;
    for (const auto& i : pre.items)
      if (i.verdict == Verdict::fail) rep.items.push_back(i);
    return out;
  }
  rep.add("precondition: composite representation", Verdict::pass);

  const std::size_t m = t.space_dim();
  const auto& ops = t.matrices();
  const auto id = Matrix<S>::identity(m);
  auto scalar_part = [m](const Matrix<S>& x) { return m == 0 ? S{} : x.trace() / S(static_cast<long>(m)); };

  std::vector<Matrix<S>> central;
  for (auto [u, v] : kOppositePairs) {
    Matrix<S> k = findim::commutator(ops[u], ops[v]);
    bool commutes = true;
    for (const auto& op : ops) commutes = commutes && findim::commutator(k, op).is_zero(tol);
    rep.add("central [" + pair_name({u, v}) + "]", commutes ? Verdict::pass : Verdict::fail,
            "commutes with all six vertex operators");
    central.push_back(std::move(k));
  }

  const std::size_t commutant = findim::commutant_dimension(t, tol);
  const bool irreducible = irreducible_hint || (m > 0 && commutant == 1);
  rep.add("irreducible", Verdict::info,
          "commutant dimension " + std::to_string(commutant) + (irreducible_hint ? ", asserted by hint" : ""));
  rep.note(findim::irreducibility_caveat<S>());

  for (std::size_t p = 0; p < kOppositePairs.size(); ++p) {
    const std::string name = pair_name(kOppositePairs[p]);
    if (!irreducible) {
      rep.add("scalar [" + name + "]", Verdict::info, "skipped, representation not known to be irreducible");
      continue;
    }
    S value = scalar_part(central[p]);
    bool scalar = (central[p] - id.scaled(value)).is_zero(tol);
    rep.add("scalar [" + name + "]", scalar ? Verdict::pass : Verdict::fail, "value " + T::to_string(value));
    if (scalar) out.central_values[name] = value;
  }

  std::vector<Matrix<S>> shifted;
  for (std::size_t v = 0; v < kVertexCount; ++v) {
    S lambda = scalar_part(ops[v]);
    out.lambdas[kVertexNames[v]] = lambda;
    out.all_lambdas_zero = out.all_lambdas_zero && T::negligible(lambda, tol);
    shifted.push_back(ops[v] - id.scaled(lambda));
    rep.add(std::string("lambda ") + kVertexNames[v], Verdict::info, T::to_string(lambda));
  }
  if (out.all_lambdas_zero) rep.note("all trace shifts vanish; the shifted operators equal the input");
  out.shifted = FinDimRep<S>(m, shifted);

  for (const auto& f : kFaces)
    for (std::size_t i = 0; i < 3; ++i) {
      Vertex p = f[i], q = f[(i + 1) % 3], r = f[(i + 2) % 3];
      bool ok = (findim::commutator(shifted[p], shifted[q]) - shifted[r]).is_zero(tol);
      rep.add(std::string("so4 [") + kVertexNames[p] + "," + kVertexNames[q] + "] = " + kVertexNames[r],
              ok ? Verdict::pass : Verdict::fail);
    }
  for (auto [u, v] : kOppositePairs) {
    bool ok = findim::commutator(shifted[u], shifted[v]).is_zero(tol);
    rep.add("so4 [" + pair_name({u, v}) + "] = 0", ok ? Verdict::pass : Verdict::fail);
  }

  // The span of the shifted operators as an abstract Lie algebra.
  Matrix<S> columns(m * m, kVertexCount);
  for (std::size_t v = 0; v < kVertexCount; ++v) {
    auto flat = detail::flatten(shifted[v]);
    for (std::size_t r = 0; r < flat.size(); ++r) columns(r, v) = flat[r];
  }
  Matrix<S> reduced = columns;
  const auto pivots = findim::rref(reduced, tol);
  const std::size_t dim = pivots.size();
  rep.add("span dimension", Verdict::info, std::to_string(dim) + " (6 when faithful)");
  Matrix<S> basis(m * m, dim);
  for (std::size_t k = 0; k < dim; ++k)
    for (std::size_t r = 0; r < m * m; ++r) basis(r, k) = columns(r, pivots[k]);
  LieTable<S> span(dim);
  bool closed = true;
  for (std::size_t i = 0; i < dim && closed; ++i)
    for (std::size_t j = i + 1; j < dim && closed; ++j) {
      auto coeffs = findim::solve(basis, detail::flatten(findim::commutator(shifted[pivots[i]], shifted[pivots[j]])), tol);
      if (!coeffs) closed = false;
      else span.set_bracket(i, j, *coeffs);
    }
  rep.add("span bracket closure", closed ? Verdict::pass : Verdict::fail);
  if (closed) {
    Matrix<S> killing = span.killing_form();
    Matrix<detail::RealOf<S>> real(dim, dim);
    bool is_real = true;
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        auto x = detail::real_value(killing(i, j), tol);
        if (!x) is_real = false;
        else real(i, j) = *x;
      }
    if (!is_real) {
      rep.add("span killing form", Verdict::fail, "Killing form is not real");
    } else {
      auto in = findim::inertia(real, tol);
      bool compact = in.zero == 0 && in.positive == 0;
      rep.add("span killing form", compact ? Verdict::pass : Verdict::fail,
              "inertia " + in.to_string() + (dim == 0 ? ", zero algebra" : ", nondegenerate negative definite required"));
    }
  }
  return out;
}

}  // namespace liecomp::octa
