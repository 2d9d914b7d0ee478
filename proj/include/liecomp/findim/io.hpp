#pragma once

// JSON composite and representation files. Scalars are written as strings
// ("3/4", "1/2-i") so that reading and writing back is bit-exact.
//
//   composite: {dimension, basis_names, subspaces: [{name, basis, structure_constants}]}
//              basis holds one row per subspace basis vector (ambient coordinates),
//              structure_constants[k][i][j] is the b_k coefficient of [b_i, b_j].
//   representation: {space_dim, matrices: {basis_name: rows}}

#include <json.hpp>

#include <complex>
#include <string>
#include <vector>

#include "liecomp/findim/representation.hpp"

namespace liecomp::findim {

namespace detail {

inline const ordered_json& field(const ordered_json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw MalformedInput(std::string("missing field '") + key + "'");
  return j.at(key);
}

inline const ordered_json& array_field(const ordered_json& j, const char* key) {
  const auto& a = field(j, key);
  if (!a.is_array()) throw MalformedInput(std::string("field '") + key + "' must be an array");
  return a;
}

inline std::size_t size_field(const ordered_json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw MalformedInput(std::string("field '") + key + "' must be a nonnegative integer");
  return v.get<std::size_t>();
}

template <class S>
S scalar_from_json(const ordered_json& v) {
  if constexpr (std::is_same_v<S, double>) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) return Rational::parse(v.get<std::string>()).to_double();
  } else if constexpr (std::is_same_v<S, std::complex<double>>) {
    if (v.is_number()) return {v.get<double>(), 0.0};
    if (v.is_string()) {
      auto g = GaussianRational::parse(v.get<std::string>());
      return {g.real().to_double(), g.imag().to_double()};
    }
  } else {
    if (v.is_string()) return S::parse(v.get<std::string>());
    if (v.is_number_integer()) return S(Rational(v.get<long>()));
  }
  throw MalformedInput("scalar entry must be a string" + std::string(ScalarTraits<S>::exact ? "" : " or number"));
}

template <class S>
ordered_json scalar_to_json(const S& x) {
  if constexpr (std::is_same_v<S, double>)
    return x;
  else if constexpr (std::is_same_v<S, std::complex<double>>)
    return x.imag() == 0 ? ordered_json(x.real()) : ordered_json(ScalarTraits<S>::to_string(x));
  else
    return x.to_string();
}

template <class S>
Matrix<S> matrix_from_rows(const ordered_json& rows, std::size_t nrows, std::size_t ncols, const std::string& what) {
  if (!rows.is_array() || rows.size() != nrows)
    throw MalformedInput(what + ": expected " + std::to_string(nrows) + " rows");
  Matrix<S> m(nrows, ncols);
  for (std::size_t r = 0; r < nrows; ++r) {
    if (!rows[r].is_array() || rows[r].size() != ncols)
      throw MalformedInput(what + ": row " + std::to_string(r) + " must have " + std::to_string(ncols) + " entries");
    for (std::size_t c = 0; c < ncols; ++c) m(r, c) = scalar_from_json<S>(rows[r][c]);
  }
  return m;
}

template <class S>
ordered_json matrix_to_rows(const Matrix<S>& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace detail

inline FinDimComposite composite_from_json(const ordered_json& j) {
  using namespace detail;
  const std::size_t dim = size_field(j, "dimension");
  const auto& names_json = array_field(j, "basis_names");
  if (names_json.size() != dim) throw MalformedInput("basis_names must have 'dimension' entries");
  std::vector<std::string> names;
  for (const auto& n : names_json) {
    if (!n.is_string()) throw MalformedInput("basis names must be strings");
    names.push_back(n.get<std::string>());
  }
  for (std::size_t a = 0; a < names.size(); ++a)
    for (std::size_t b = a + 1; b < names.size(); ++b)
      if (names[a] == names[b]) throw MalformedInput("duplicate basis name '" + names[a] + "'");
  std::vector<SubspaceAlgebra> subs;
  for (const auto& s : array_field(j, "subspaces")) {
    const auto& name_json = field(s, "name");
    if (!name_json.is_string()) throw MalformedInput("subspace name must be a string");
    std::string name = name_json.get<std::string>();
    const auto& basis = array_field(s, "basis");
    const std::size_t d = basis.size();
    QMatrix rows = matrix_from_rows<Rational>(basis, d, dim, "subspace " + name + " basis");
    SubspaceAlgebra sub(name, rows.transpose());
    const auto& cs = array_field(s, "structure_constants");
    if (cs.size() != d) throw MalformedInput("subspace " + name + ": structure_constants must be d x d x d");
    for (std::size_t k = 0; k < d; ++k) {
      QMatrix ck = matrix_from_rows<Rational>(cs[k], d, d, "subspace " + name + " structure_constants");
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) sub.c(k, a, b) = ck(a, b);
    }
    subs.push_back(std::move(sub));
  }
  return FinDimComposite(std::move(names), std::move(subs));
}

inline ordered_json composite_to_json(const FinDimComposite& c) {
  ordered_json j;
  j["dimension"] = c.dimension();
  j["basis_names"] = c.basis_names();
  ordered_json subs = ordered_json::array();
  for (const auto& s : c.subspaces()) {
    ordered_json sj;
    sj["name"] = s.name();
    sj["basis"] = detail::matrix_to_rows(s.inclusion().transpose());
    ordered_json cs = ordered_json::array();
    const std::size_t d = s.dimension();
    for (std::size_t k = 0; k < d; ++k) {
      QMatrix ck(d, d);
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) ck(a, b) = s.c(k, a, b);
      cs.push_back(detail::matrix_to_rows(ck));
    }
    sj["structure_constants"] = cs;
    subs.push_back(std::move(sj));
  }
  j["subspaces"] = subs;
  return j;
}

/// Reads matrices keyed by the composite's basis names.
template <class S>
FinDimRep<S> representation_from_json(const ordered_json& j, const FinDimComposite& c) {
  using namespace detail;
  const std::size_t m = size_field(j, "space_dim");
  const auto& mats = field(j, "matrices");
  if (!mats.is_object()) throw MalformedInput("'matrices' must be an object keyed by basis name");
  for (const auto& [key, value] : mats.items()) {
    (void)value;
    bool known = false;
    for (const auto& n : c.basis_names()) known = known || n == key;
    if (!known) throw MalformedInput("matrix for unknown basis vector '" + key + "'");
  }
  std::vector<Matrix<S>> ms;
  for (const auto& n : c.basis_names()) {
    if (!mats.contains(n)) throw MalformedInput("no matrix for basis vector '" + n + "'");
    ms.push_back(matrix_from_rows<S>(mats.at(n), m, m, "matrix " + n));
  }
  return FinDimRep<S>(m, std::move(ms));
}

template <class S>
ordered_json representation_to_json(const FinDimRep<S>& t, const FinDimComposite& c) {
  if (t.basis_count() != c.dimension()) throw DimensionMismatch("representation does not match the composite");
  ordered_json j;
  j["space_dim"] = t.space_dim();
  ordered_json mats = ordered_json::object();
  for (std::size_t b = 0; b < c.dimension(); ++b) mats[c.basis_names()[b]] = detail::matrix_to_rows(t.matrix(b));
  j["matrices"] = mats;
  return j;
}

/// True when any matrix entry is a JSON number, i.e. the file asks for the
/// floating point path.
inline bool representation_is_floating(const ordered_json& j) {
  if (!j.is_object() || !j.contains("matrices") || !j["matrices"].is_object()) return false;
  for (const auto& [key, rows] : j["matrices"].items()) {
    (void)key;
    if (!rows.is_array()) continue;
    for (const auto& row : rows)
      if (row.is_array())
        for (const auto& x : row)
          if (x.is_number_float()) return true;
  }
  return false;
}

inline ordered_json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw MalformedInput(what + ": " + e.what());
  }
}

}  // namespace liecomp::findim
