#pragma once

// Three-dimensional Δ-complexes given by gluing data.
//
// File format (UTF-8, line based):
//
//   # comment
//   tet <name>: <f0> <f1> <f2> <f3>     faces ∂0 .. ∂3 of a tetrahedron
//   face <name>: <e0> <e1> <e2>         edges ∂0 .. ∂2 of a face (optional)
//
// Two occurrences of a face name denote the same cell map, so every face
// must occur exactly twice.  When edge data is supplied it is used only for
// validation: counts (as many edges as tetrahedra, twice as many faces) and
// the simplicial identities ∂i ∂j = ∂(j-1) ∂i (i < j) on every tetrahedron.

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dgw/error.hpp"

namespace dgw {

struct Tetrahedron {
  std::string name;
  std::array<std::string, 4> faces;
  std::size_t line = 0;
};

struct FaceCell {
  std::string name;
  std::array<std::string, 3> edges;
  std::size_t line = 0;
};

struct Triangulation {
  std::vector<Tetrahedron> tets;
  std::vector<FaceCell> faces;  // optional edge data; empty if not supplied

  /// Sorted list of face names used by the tetrahedra.
  std::vector<std::string> face_names() const {
    std::set<std::string> s;
    for (const auto& t : tets) s.insert(t.faces.begin(), t.faces.end());
    return {s.begin(), s.end()};
  }

  std::vector<std::string> edge_names() const {
    std::set<std::string> s;
    for (const auto& f : faces) s.insert(f.edges.begin(), f.edges.end());
    return {s.begin(), s.end()};
  }

  const FaceCell* find_face(const std::string& name) const {
    for (const auto& f : faces)
      if (f.name == name) return &f;
    return nullptr;
  }

  std::size_t find_tet(const std::string& name) const {
    for (std::size_t t = 0; t < tets.size(); ++t)
      if (tets[t].name == name) return t;
    throw ValidationError("unknown tetrahedron '" + name + "'");
  }

  /// Throws ValidationError (with a line number where one applies) if the
  /// gluing data is inconsistent.
  void validate() const {
    if (tets.empty()) throw ValidationError("no tetrahedra");
    std::map<std::string, std::size_t> count, first_line;
    std::set<std::string> tet_names;
    for (const auto& t : tets) {
      if (!tet_names.insert(t.name).second)
        throw ValidationError("tetrahedron '" + t.name + "' declared twice", t.line);
      for (const auto& f : t.faces) {
        if (++count[f] > 2)
          throw ValidationError("face '" + f + "' occurs more than twice", t.line);
        first_line.emplace(f, t.line);
      }
    }
    for (const auto& [f, c] : count)
      if (c != 2)
        throw ValidationError("face '" + f + "' occurs only once", first_line[f]);
    if (faces.empty()) return;

    std::set<std::string> declared;
    for (const auto& f : faces) {
      if (!declared.insert(f.name).second)
        throw ValidationError("face '" + f.name + "' declared twice", f.line);
      if (!count.count(f.name))
        throw ValidationError("face '" + f.name + "' is not used by any tetrahedron",
                              f.line);
    }
    for (const auto& [f, c] : count)
      if (!declared.count(f))
        throw ValidationError("face '" + f + "' has no edge data", first_line[f]);
    if (edge_names().size() != tets.size())
      throw ValidationError("expected as many edges as tetrahedra (" +
                            std::to_string(tets.size()) + "), found " +
                            std::to_string(edge_names().size()));
    if (count.size() != 2 * tets.size())
      throw ValidationError("expected twice as many faces as tetrahedra");
    for (const auto& t : tets) {
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) {
          const auto& a = find_face(t.faces[j])->edges[i];
          const auto& b = find_face(t.faces[i])->edges[j - 1];
          if (a != b)
            throw ValidationError("tetrahedron '" + t.name + "': edge " +
                                      std::to_string(i) + " of face " + t.faces[j] +
                                      " is " + a + " but edge " +
                                      std::to_string(j - 1) + " of face " +
                                      t.faces[i] + " is " + b,
                                  t.line);
        }
    }
  }

  /// Edge between vertices p != q of tetrahedron t, from the edge data.
  const std::string& edge_of(std::size_t t, std::size_t p, std::size_t q) const {
    std::size_t r = 0;
    while (r == p || r == q) ++r;
    const FaceCell* f = find_face(tets[t].faces[r]);
    if (!f) throw ValidationError("no edge data for face " + tets[t].faces[r]);
    // vertices of the face in order are {0..3} \ {r}
    std::vector<std::size_t> verts;
    for (std::size_t v = 0; v < 4; ++v)
      if (v != r) verts.push_back(v);
    std::size_t m = 0;
    while (verts[m] == p || verts[m] == q) ++m;
    return f->edges[m];
  }

  std::string to_text() const {
    std::ostringstream os;
    for (const auto& t : tets)
      os << "tet " << t.name << ": " << t.faces[0] << " " << t.faces[1] << " "
         << t.faces[2] << " " << t.faces[3] << "\n";
    for (const auto& f : faces)
      os << "face " << f.name << ": " << f.edges[0] << " " << f.edges[1] << " "
         << f.edges[2] << "\n";
    return os.str();
  }
};

/// Parses and validates a triangulation.
inline Triangulation parse_triangulation(const std::string& text) {
  Triangulation tri;
  std::istringstream is(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto colon = line.find(':');
    std::istringstream head(line.substr(0, colon));
    std::string kind, name, extra;
    if (!(head >> kind)) continue;
    if (colon == std::string::npos)
      throw ValidationError("expected '" + kind + " <name>: ...'", lineno);
    if (!(head >> name) || (head >> extra))
      throw ValidationError("expected exactly one name before ':'", lineno);
    std::istringstream body(line.substr(colon + 1));
    std::vector<std::string> items;
    std::string tok;
    while (body >> tok) items.push_back(tok);
    if (kind == "tet") {
      if (items.size() != 4)
        throw ValidationError("a tetrahedron needs 4 faces, got " +
                                  std::to_string(items.size()),
                              lineno);
      tri.tets.push_back({name, {items[0], items[1], items[2], items[3]}, lineno});
    } else if (kind == "face") {
      if (items.size() != 3)
        throw ValidationError("a face needs 3 edges, got " +
                                  std::to_string(items.size()),
                              lineno);
      tri.faces.push_back({name, {items[0], items[1], items[2]}, lineno});
    } else {
      throw ValidationError("unknown statement '" + kind + "'", lineno);
    }
  }
  tri.validate();
  return tri;
}

namespace presets {

inline const std::map<std::string, std::string>& triangulation_texts() {
  static const std::map<std::string, std::string> texts{
      {"trefoil",
       "# trefoil knot complement\n"
       "tet u: a b c d\n"
       "tet v: d c b a\n"
       "face a: p p p\n"
       "face b: p q p\n"
       "face c: p q p\n"
       "face d: p p p\n"},
      {"fig8",
       "# figure-eight knot complement\n"
       "tet u: a b c d\n"
       "tet v: c d a b\n"
       "face a: p q q\n"
       "face b: p p q\n"
       "face c: q p p\n"
       "face d: q q p\n"},
  };
  return texts;
}

inline std::vector<std::string> names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : triangulation_texts()) out.push_back(k);
  return out;
}

inline std::optional<Triangulation> find(const std::string& name) {
  auto it = triangulation_texts().find(name);
  if (it == triangulation_texts().end()) return std::nullopt;
  return parse_triangulation(it->second);
}

}  // namespace presets

}  // namespace dgw
