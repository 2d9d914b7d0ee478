#pragma once

// The octahedron composite: six vertices A..F spanning a 6-dimensional space,
// four alternating oriented faces each carrying so(3) with [P,Q] = R cyclically.

#include <array>
#include <string>
#include <utility>

#include "liecomp/findim/composite.hpp"

namespace liecomp::octa {

using findim::FinDimComposite;
using findim::QMatrix;
using findim::SubspaceAlgebra;

enum Vertex : std::size_t { A, B, C, D, E, F };
inline constexpr std::size_t kVertexCount = 6;
inline constexpr std::array<const char*, kVertexCount> kVertexNames = {"A", "B", "C", "D", "E", "F"};

using Face = std::array<Vertex, 3>;
inline constexpr std::array<Face, 4> kFaces = {{{A, B, C}, {A, D, E}, {C, D, F}, {E, B, F}}};
inline constexpr std::array<std::pair<Vertex, Vertex>, 3> kOppositePairs = {{{A, F}, {B, D}, {C, E}}};

inline std::string face_name(const Face& f) {
  return std::string(kVertexNames[f[0]]) + kVertexNames[f[1]] + kVertexNames[f[2]];
}

inline std::string pair_name(const std::pair<Vertex, Vertex>& p) {
  return std::string(kVertexNames[p.first]) + kVertexNames[p.second];
}

/// True when every two chosen faces share exactly one vertex, every vertex
/// lies on exactly two of them, and every edge (pair of non-opposite
/// vertices) lies on exactly one.
inline bool labels_consistent() {
  for (std::size_t i = 0; i < kFaces.size(); ++i)
    for (std::size_t j = i + 1; j < kFaces.size(); ++j) {
      int shared = 0;
      for (auto u : kFaces[i])
        for (auto v : kFaces[j]) shared += u == v;
      if (shared != 1) return false;
    }
  for (std::size_t v = 0; v < kVertexCount; ++v) {
    int faces = 0;
    for (const auto& f : kFaces)
      for (auto u : f) faces += u == v;
    if (faces != 2) return false;
  }
  auto opposite = [](std::size_t u, std::size_t v) {
    for (auto [p, q] : kOppositePairs)
      if ((p == u && q == v) || (p == v && q == u)) return true;
    return false;
  };
  for (std::size_t u = 0; u < kVertexCount; ++u)
    for (std::size_t v = u + 1; v < kVertexCount; ++v) {
      int on = 0;
      for (const auto& f : kFaces) {
        bool hu = false, hv = false;
        for (auto w : f) {
          hu = hu || w == u;
          hv = hv || w == v;
        }
        on += hu && hv;
      }
      if (on != (opposite(u, v) ? 0 : 1)) return false;
    }
  return true;
}

inline FinDimComposite build_octahedron() {
  std::vector<std::string> names(kVertexNames.begin(), kVertexNames.end());
  std::vector<SubspaceAlgebra> faces;
  for (const auto& f : kFaces) {
    QMatrix inc(kVertexCount, 3);
    for (std::size_t i = 0; i < 3; ++i) inc(f[i], i) = findim::Rational(1);
    SubspaceAlgebra s(face_name(f), inc);
    // [P,Q] = R, [Q,R] = P, [R,P] = Q
    for (std::size_t i = 0; i < 3; ++i) {
      findim::QVector target(3);
      target[(i + 2) % 3] = findim::Rational(1);
      s.set_bracket(i, (i + 1) % 3, target);
    }
    faces.push_back(std::move(s));
  }
  return FinDimComposite(std::move(names), std::move(faces));
}

}  // namespace liecomp::octa
