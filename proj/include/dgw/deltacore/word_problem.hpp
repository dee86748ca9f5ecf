#pragma once

// The word problem of a presented groupoid, reduced to its vertex groups.
//
// A connected groupoid with a spanning tree T is determined by one vertex
// group: a path w from A to B corresponds to the loop t_A · w · t_B^-1 at the
// root, where t_A is the tree path from the root to A.  Each component's
// vertex group is presented with one generator per arrow (tree arrows are
// relators of length one), simplified by Tietze eliminations and then
// completed by shortlex Knuth-Bendix on the few remaining generators and
// their formal inverses.  Completion failures propagate as
// WordProblemUnresolved; there is no fallback.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "dgw/deltacore/presentation.hpp"
#include "dgw/deltacore/rewriting.hpp"
#include "dgw/error.hpp"
#include "dgw/grouppair/group_presentation.hpp"

namespace dgw {

class GroupoidWordProblem {
 public:
  explicit GroupoidWordProblem(const DeltaPresentation& p,
                               std::size_t rule_cap = RewriteSystem::default_rule_cap)
      : p_(p) {
    const std::size_t n = p.num_arrows();
    const std::size_t m = p.num_nodes();
    // components by union-find on the nodes
    std::vector<std::size_t> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t a = find(p.dom[x]), b = find(p.cod[x]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    component_of_node_.assign(m, 0);
    std::vector<std::size_t> comp_index(m, m);
    for (std::size_t a = 0; a < m; ++a) {
      std::size_t r = find(a);
      if (comp_index[r] == m) {
        comp_index[r] = components_.size();
        components_.emplace_back();
        components_.back().root = r;
      }
      component_of_node_[a] = comp_index[r];
    }

    // spanning trees by breadth-first search from each root
    tree_path_.assign(m, {});
    std::vector<bool> reached(m, false), in_tree(n, false);
    for (auto& c : components_) {
      reached[c.root] = true;
      std::vector<std::size_t> queue{c.root};
      for (std::size_t q = 0; q < queue.size(); ++q) {
        std::size_t a = queue[q];
        for (std::size_t x = 0; x < n; ++x) {
          if (p.dom[x] != a || reached[p.cod[x]]) continue;
          reached[p.cod[x]] = true;
          in_tree[x] = true;
          tree_path_[p.cod[x]] = tree_path_[a];
          tree_path_[p.cod[x]].push_back(static_cast<std::uint32_t>(x));
          queue.push_back(p.cod[x]);
        }
      }
    }

    // one group presentation per component, generators = arrows
    local_.assign(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
      auto& c = components_[component_of_node_[p.dom[x]]];
      local_[x] = c.arrows.size();
      c.arrows.push_back(x);
    }
    for (auto& c : components_) {
      GroupPresentationData g;
      for (std::size_t x : c.arrows) g.generators.push_back(p.arrow_names[x]);
      for (std::size_t x : c.arrows) {
        if (in_tree[x]) g.relators.push_back({{local_[x], false}});
        g.relators.push_back({{local_[x], false}, {local_[p.inv[x]], false}});
      }
      for (const auto& e : p.products) {
        if (component_of_node_[p.dom[e.x]] != component_of_node(c)) continue;
        g.relators.push_back(
            {{local_[e.x], false}, {local_[e.y], false}, {local_[e.xy], true}});
      }
      c.tietze = tietze_simplify(g);
      c.rewriting = complete_group(c.tietze.simplified, rule_cap);
    }
    arrow_image_.resize(n);
    for (std::size_t x = 0; x < n; ++x) arrow_image_[x] = group_image({static_cast<std::uint32_t>(x)});
  }

  std::size_t num_components() const noexcept { return components_.size(); }
  std::size_t component(std::size_t node) const { return component_of_node_.at(node); }

  /// The simplified vertex group of the component containing `node`.
  const GroupPresentationData& vertex_group(std::size_t node) const {
    return components_.at(component(node)).tietze.simplified;
  }

  /// Total number of rules of the completed vertex-group systems.
  std::size_t total_rules() const {
    std::size_t r = 0;
    for (const auto& c : components_) r += c.rewriting.rules().size();
    return r;
  }

  /// Normal form of the vertex-group element t_A · w · t_B^-1, as a word in
  /// the letters 2g (generator g) and 2g+1 (its inverse).
  ArrowWord group_image(const ArrowWord& w) const {
    check_path(w);
    if (w.empty()) return {};
    const Component& c = components_[component_of_node_[p_.dom[w.front()]]];
    ArrowWord letters;
    for (std::uint32_t x : w)
      for (const Letter& l : c.tietze.image[local_[x]])
        letters.push_back(static_cast<std::uint32_t>(2 * l.gen + (l.inverse ? 1 : 0)));
    return c.rewriting.normal_form(std::move(letters));
  }

  /// Canonical arrow path equal to `w`: the empty path for an identity, a
  /// single arrow if w equals one (the least such index), and otherwise a
  /// freely reduced path built from tree paths and the kept generators.
  ArrowWord normal_form(const ArrowWord& w) const {
    check_path(w);
    if (w.empty()) return {};
    const std::size_t a = p_.dom[w.front()], b = p_.cod[w.back()];
    const ArrowWord img = group_image(w);
    if (img.empty() && a == b) return {};
    for (std::size_t z = 0; z < p_.num_arrows(); ++z)
      if (p_.dom[z] == a && p_.cod[z] == b && arrow_image_[z] == img)
        return {static_cast<std::uint32_t>(z)};
    const Component& c = components_[component_of_node_[a]];
    ArrowWord path = inverse_path(tree_path_[a]);
    for (std::uint32_t letter : img) {
      std::size_t x = c.arrows[c.tietze.kept[letter / 2]];
      bool inverse = letter % 2 == 1;
      std::size_t from = inverse ? p_.cod[x] : p_.dom[x];
      std::size_t to = inverse ? p_.dom[x] : p_.cod[x];
      append(path, tree_path_[from]);
      path.push_back(static_cast<std::uint32_t>(inverse ? p_.inv[x] : x));
      append(path, inverse_path(tree_path_[to]));
    }
    append(path, tree_path_[b]);
    return path;
  }

  bool equal(const ArrowWord& u, const ArrowWord& v) const {
    check_path(u);
    check_path(v);
    if (u.empty() || v.empty()) return normal_form(u) == normal_form(v);
    return p_.dom[u.front()] == p_.dom[v.front()] && p_.cod[u.back()] == p_.cod[v.back()] &&
           group_image(u) == group_image(v);
  }

  /// Throws ValidationError unless w is a composable path of existing arrows.
  void check_path(const ArrowWord& w) const {
    for (std::size_t q = 0; q < w.size(); ++q) {
      if (w[q] >= p_.num_arrows()) throw ValidationError("word refers to a missing arrow");
      if (q > 0 && p_.cod[w[q - 1]] != p_.dom[w[q]])
        throw ValidationError("word is not a composable path at position " +
                              std::to_string(q));
    }
  }

 private:
  struct Component {
    std::size_t root = 0;
    std::vector<std::size_t> arrows;  // local generator -> arrow
    TietzeResult tietze;
    RewriteSystem rewriting;
  };

  std::size_t component_of_node(const Component& c) const {
    return component_of_node_[c.root];
  }

  static RewriteSystem complete_group(const GroupPresentationData& g, std::size_t cap) {
    std::vector<std::pair<ArrowWord, ArrowWord>> eqs;
    for (std::uint32_t a = 0; a < g.generators.size(); ++a) {
      eqs.push_back({{2 * a, 2 * a + 1}, {}});
      eqs.push_back({{2 * a + 1, 2 * a}, {}});
    }
    for (const GroupWord& r : g.relators) {
      ArrowWord w;
      for (const Letter& l : r)
        w.push_back(static_cast<std::uint32_t>(2 * l.gen + (l.inverse ? 1 : 0)));
      // r = 1 as (first half) = (inverse of second half)
      std::size_t h = (w.size() + 1) / 2;
      ArrowWord lhs(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(h)), rhs;
      for (std::size_t q = w.size(); q-- > h;) rhs.push_back(w[q] ^ 1u);
      eqs.push_back({std::move(lhs), std::move(rhs)});
    }
    return RewriteSystem::from_equations(eqs, cap);
  }

  ArrowWord inverse_path(const ArrowWord& w) const {
    ArrowWord out;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
      out.push_back(static_cast<std::uint32_t>(p_.inv[*it]));
    return out;
  }

  // Appends with cancellation of adjacent x · i(x).
  void append(ArrowWord& path, const ArrowWord& w) const {
    for (std::uint32_t x : w) {
      if (!path.empty() && p_.inv[path.back()] == x) path.pop_back();
      else path.push_back(x);
    }
  }

  DeltaPresentation p_;
  std::vector<Component> components_;
  std::vector<std::size_t> component_of_node_;
  std::vector<ArrowWord> tree_path_;
  std::vector<std::size_t> local_;
  std::vector<ArrowWord> arrow_image_;
};

}  // namespace dgw
