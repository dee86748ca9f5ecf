#pragma once

// The 2-3 Pachner move on gluing data.
//
// Two distinct tetrahedra u, v sharing a face F (F = ∂_i u = ∂_k v) span a
// bipyramid with equator vertices T0 < T1 < T2 (the vertices of F), north
// pole N (vertex i of u) and south pole S (vertex k of v).  The move replaces
// u and v by the three tetrahedra {Ta, Tb, N, S}, glued along the new edge
// N-S and three new faces {Tm, N, S}.  Vertices of each new tetrahedron are
// ordered by one total order on the five vertices that restricts to the
// vertex orders of u and v, so all gluings remain order preserving.

#include <algorithm>
#include <array>
#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "dgw/error.hpp"
#include "dgw/tetra/triangulation.hpp"

namespace dgw {

/// Applies the move across `face`.  `tet` selects which of the two
/// tetrahedra on the face plays the role of u (it matters only for naming
/// and for the N/S order when i = k).  Throws ValidationError if the face is
/// unknown, does not touch `tet`, or glues a tetrahedron to itself.
inline Triangulation pachner23(const Triangulation& tri, const std::string& face,
                               const std::string& tet = "") {
  tri.validate();
  struct Occ {
    std::size_t t, pos;
  };
  std::vector<Occ> occ;
  for (std::size_t t = 0; t < tri.tets.size(); ++t)
    for (std::size_t p = 0; p < 4; ++p)
      if (tri.tets[t].faces[p] == face) occ.push_back({t, p});
  if (occ.size() != 2) throw ValidationError("unknown face '" + face + "'");
  if (occ[0].t == occ[1].t)
    throw ValidationError("face '" + face +
                          "' glues a tetrahedron to itself; the 2-3 move is unsupported there");
  if (!tet.empty()) {
    std::size_t want = tri.find_tet(tet);
    if (occ[1].t == want) std::swap(occ[0], occ[1]);
    if (occ[0].t != want)
      throw ValidationError("tetrahedron '" + tet + "' does not contain face '" + face + "'");
  }
  const auto [u, i] = occ[0];
  const auto [v, k] = occ[1];

  // Vertex labels: 0..2 = equator T0..T2, 3 = N, 4 = S.
  constexpr std::size_t N = 3, S = 4;
  std::vector<std::size_t> order;
  for (std::size_t m = 0; m < 3; ++m) {
    if (m == i) order.push_back(N);
    if (m == k) order.push_back(S);
    order.push_back(m);
  }
  if (i == 3) order.push_back(N);
  if (k == 3) order.push_back(S);
  // vertex position of equator vertex m inside u and inside v
  auto upos = [&](std::size_t m) { return m < i ? m : m + 1; };
  auto vpos = [&](std::size_t m) { return m < k ? m : m + 1; };

  const bool edges = !tri.faces.empty();
  const std::string new_edge = "e_" + face;
  auto new_face = [&](std::size_t m) { return face + "_" + std::to_string(m); };

  Triangulation out;
  for (std::size_t t = 0; t < tri.tets.size(); ++t)
    if (t != u && t != v) out.tets.push_back(tri.tets[t]);
  if (edges)
    for (const auto& f : tri.faces)
      if (f.name != face) out.faces.push_back(f);

  const std::string& un = tri.tets[u].name;
  const std::string& vn = tri.tets[v].name;
  for (auto [a, b] : {std::array<std::size_t, 2>{0, 1}, {0, 2}, {1, 2}}) {
    std::size_t c = 3 - a - b;
    std::vector<std::size_t> verts;
    for (std::size_t w : order)
      if (w == a || w == b || w == N || w == S) verts.push_back(w);
    Tetrahedron nt;
    nt.name = un + vn + std::to_string(a) + std::to_string(b);
    for (std::size_t p = 0; p < 4; ++p) {
      std::size_t w = verts[p];  // the face opposite w
      if (w == S) nt.faces[p] = tri.tets[u].faces[upos(c)];
      else if (w == N) nt.faces[p] = tri.tets[v].faces[vpos(c)];
      else nt.faces[p] = new_face(w == a ? b : a);
    }
    out.tets.push_back(nt);
  }
  if (edges) {
    // Edge between two of the five vertices.
    auto edge = [&](std::size_t p, std::size_t q) -> std::string {
      if (p > q) std::swap(p, q);
      if (p == N && q == S) return new_edge;
      if (q == N) return tri.edge_of(u, upos(p), i);
      if (q == S && p != N) return tri.edge_of(v, vpos(p), k);
      return tri.edge_of(u, upos(p), upos(q));
    };
    for (std::size_t m = 0; m < 3; ++m) {
      std::vector<std::size_t> verts;
      for (std::size_t w : order)
        if (w == m || w == N || w == S) verts.push_back(w);
      FaceCell f;
      f.name = new_face(m);
      for (std::size_t p = 0; p < 3; ++p) {
        std::vector<std::size_t> rest;
        for (std::size_t q = 0; q < 3; ++q)
          if (q != p) rest.push_back(verts[q]);
        f.edges[p] = edge(rest[0], rest[1]);
      }
      out.faces.push_back(f);
    }
  }
  out.validate();
  return out;
}

}  // namespace dgw
