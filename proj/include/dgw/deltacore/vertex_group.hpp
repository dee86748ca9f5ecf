#pragma once

// Vertex (isotropy) groups of presented groupoids by spanning-tree
// contraction: pick a spanning tree of the component of the base node, set
// its arrows to 1, and read every defining relation as a group relator in the
// remaining arrows.

#include <cstddef>
#include <string>
#include <vector>

#include "dgw/deltacore/finite_groupoid.hpp"
#include "dgw/deltacore/presentation.hpp"
#include "dgw/error.hpp"
#include "dgw/grouppair/group_presentation.hpp"
#include "dgw/zlin.hpp"

namespace dgw {

/// A groupoid presented by a quiver and relators (closed paths, written with
/// letters that are arrows or their formal inverses, equal to the identity).
struct QuiverRelators {
  std::size_t num_nodes = 0;
  std::vector<std::string> arrow_names;
  std::vector<std::size_t> dom, cod;
  std::vector<GroupWord> relators;  // Letter::gen is an arrow index
};

/// Presentation of the vertex group at `node`.
inline GroupPresentationData vertex_group(const QuiverRelators& q, std::size_t node) {
  if (node >= q.num_nodes)
    throw ValidationError("node " + std::to_string(node) + " does not exist");
  const std::size_t n = q.arrow_names.size();
  std::vector<bool> reached(q.num_nodes, false), in_tree(n, false),
      in_component(n, false);
  reached[node] = true;
  std::vector<std::size_t> frontier{node};
  while (!frontier.empty()) {
    std::size_t a = frontier.back();
    frontier.pop_back();
    for (std::size_t x = 0; x < n; ++x) {
      if (q.dom[x] != a && q.cod[x] != a) continue;
      in_component[x] = true;
      std::size_t b = q.dom[x] == a ? q.cod[x] : q.dom[x];
      if (!reached[b]) {
        reached[b] = true;
        in_tree[x] = true;
        frontier.push_back(b);
      }
    }
  }
  GroupPresentationData out;
  std::vector<std::size_t> gen_of(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    if (!in_component[x] || in_tree[x]) continue;
    gen_of[x] = out.generators.size();
    out.generators.push_back(q.arrow_names[x]);
  }
  for (const GroupWord& r : q.relators) {
    if (r.empty() || !in_component[r.front().gen]) continue;
    GroupWord w;
    for (const Letter& l : r)
      if (!in_tree[l.gen]) w.push_back({gen_of[l.gen], l.inverse});
    out.relators.push_back(free_reduce(w));
  }
  return out;
}

inline InvariantFactors vertex_group_abelianized(const QuiverRelators& q,
                                                 std::size_t node) {
  return vertex_group(q, node).abelianization();
}

/// Arrows = H; relators x·i(x) and x·y·μ(x,y)^-1.
inline QuiverRelators quiver_relators(const DeltaPresentation& p) {
  QuiverRelators q;
  q.num_nodes = p.num_nodes();
  q.arrow_names = p.arrow_names;
  q.dom = p.dom;
  q.cod = p.cod;
  for (std::size_t x = 0; x < p.num_arrows(); ++x)
    q.relators.push_back({{x, false}, {p.inv[x], false}});
  for (const auto& e : p.products)
    q.relators.push_back({{e.x, false}, {e.y, false}, {e.xy, true}});
  return q;
}

/// Arrows = all morphisms; relators from the full multiplication table.
inline QuiverRelators quiver_relators(const FiniteDeltaGroupoid& g) {
  QuiverRelators q;
  q.num_nodes = g.num_objects();
  const std::size_t n = g.num_morphisms();
  for (std::size_t x = 0; x < n; ++x) {
    q.arrow_names.push_back(g.name(x));
    q.dom.push_back(g.dom(x));
    q.cod.push_back(g.cod(x));
    if (g.is_identity(x)) q.relators.push_back({{x, false}});
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t xy = g.compose(x, y);
      if (xy != FiniteDeltaGroupoid::none)
        q.relators.push_back({{x, false}, {y, false}, {xy, true}});
    }
  return q;
}

}  // namespace dgw
