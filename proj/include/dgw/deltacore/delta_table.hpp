#pragma once

// DeltaTable: the finite data of a Δ-groupoid that the homology and ring
// computations need — H with dom, cod, i, j, the H-product table
// (x, y) -> xy for H-composable pairs, objects, and connected components.
//
// A table can be extracted from an explicit FiniteDeltaGroupoid or from a
// presentation together with a word-problem solver: any type with
// `ArrowWord normal_form(ArrowWord) const` that returns identical words for
// equal paths (RewriteSystem, GroupoidWordProblem).  The overloads taking
// only a presentation use GroupoidWordProblem.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dgw/deltacore/axioms.hpp"
#include "dgw/deltacore/finite_groupoid.hpp"
#include "dgw/deltacore/presentation.hpp"
#include "dgw/deltacore/rewriting.hpp"
#include "dgw/deltacore/word_problem.hpp"
#include "dgw/error.hpp"

namespace dgw {

struct DeltaTable {
  static constexpr std::size_t none = std::numeric_limits<std::size_t>::max();

  std::size_t num_objects = 0;
  std::vector<std::string> object_names;
  std::vector<std::string> names;       // per H-element
  std::vector<std::size_t> dom, cod;    // per H-element
  std::vector<std::size_t> inv, j;      // per H-element
  std::vector<std::size_t> prod;        // n x n, xy or none
  std::vector<std::size_t> component;   // per object
  std::size_t num_components = 0;

  std::size_t size() const noexcept { return names.size(); }
  std::size_t k(std::size_t x) const { return inv[j[inv[x]]]; }
  std::size_t product(std::size_t x, std::size_t y) const {
    return prod[x * size() + y];
  }
  bool h_composable(std::size_t x, std::size_t y) const {
    return product(x, y) != none;
  }

  std::vector<std::pair<std::size_t, std::size_t>> h_composable_pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t x = 0; x < size(); ++x)
      for (std::size_t y = 0; y < size(); ++y)
        if (h_composable(x, y)) out.emplace_back(x, y);
    return out;
  }

  /// A* = dom(j(x)) for any x with dom(x) = A.
  std::size_t object_star(std::size_t a) const {
    std::size_t result = none;
    for (std::size_t x = 0; x < size(); ++x) {
      if (dom[x] != a) continue;
      if (result == none) {
        result = dom[j[x]];
      } else if (result != dom[j[x]]) {
        throw StructuralError("object involution is not well defined at " +
                              object_names[a]);
      }
    }
    if (result == none)
      throw StructuralError("no element of H starts at " + object_names[a]);
    return result;
  }

  /// Computes connected components and checks the basic shape invariants.
  void finalize() {
    const std::size_t n = size();
    if (dom.size() != n || cod.size() != n || inv.size() != n || j.size() != n ||
        prod.size() != n * n || object_names.size() != num_objects)
      throw ValidationError("delta table has inconsistent sizes");
    for (std::size_t x = 0; x < n; ++x) {
      if (inv[x] >= n || j[x] >= n || inv[inv[x]] != x || j[j[x]] != x)
        throw StructuralError("i or j is not an involution of H at " + names[x]);
    }
    std::vector<std::size_t> parent(num_objects);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t a = find(dom[x]), b = find(cod[x]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    component.assign(num_objects, none);
    num_components = 0;
    std::vector<std::size_t> label(num_objects, none);
    for (std::size_t a = 0; a < num_objects; ++a) {
      std::size_t r = find(a);
      if (label[r] == none) label[r] = num_components++;
      component[a] = label[r];
    }
  }
};

/// The H-part of an explicit finite Δ-groupoid.
inline DeltaTable delta_table(const FiniteDeltaGroupoid& g) {
  DeltaTable t;
  t.num_objects = g.num_objects();
  for (std::size_t a = 0; a < g.num_objects(); ++a)
    t.object_names.push_back(g.object_name(a));
  const auto& h = g.h();
  const std::size_t n = h.size();
  for (std::size_t x : h) {
    t.names.push_back(g.name(x));
    t.dom.push_back(g.dom(x));
    t.cod.push_back(g.cod(x));
    std::size_t ix = g.h_position(g.inverse(x));
    std::size_t jx = g.h_position(g.j(x));
    if (ix == FiniteDeltaGroupoid::none)
      throw StructuralError("inverse of " + g.name(x) + " is not in H");
    if (jx == FiniteDeltaGroupoid::none)
      throw StructuralError("j(" + g.name(x) + ") is not in H");
    t.inv.push_back(ix);
    t.j.push_back(jx);
  }
  t.prod.assign(n * n, DeltaTable::none);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t p = g.compose(h[a], h[b]);
      if (p == FiniteDeltaGroupoid::none) continue;
      std::size_t q = g.h_position(p);
      if (q != FiniteDeltaGroupoid::none) t.prod[a * n + b] = q;
    }
  t.finalize();
  return t;
}

/// Normal form of a composable arrow path.  Throws ValidationError if the
/// path is not composable.
template <class Solver>
ArrowWord normal_form(const DeltaPresentation& p, const Solver& rs,
                      const ArrowWord& word) {
  for (std::size_t q = 0; q < word.size(); ++q) {
    if (word[q] >= p.num_arrows())
      throw ValidationError("word refers to a missing arrow");
    if (q > 0 && p.cod[word[q - 1]] != p.dom[word[q]])
      throw ValidationError("word is not a composable path at position " +
                            std::to_string(q));
  }
  return rs.normal_form(word);
}

/// All (x, y) with cod(x) = dom(y) whose product reduces to a single arrow.
template <class Solver>
std::vector<ProductEntry> h_composable_pairs(const DeltaPresentation& p,
                                             const Solver& rs) {
  std::vector<ProductEntry> out;
  for (std::size_t x = 0; x < p.num_arrows(); ++x)
    for (std::size_t y = 0; y < p.num_arrows(); ++y) {
      if (p.cod[x] != p.dom[y]) continue;
      ArrowWord nf = rs.normal_form({static_cast<std::uint32_t>(x),
                                     static_cast<std::uint32_t>(y)});
      if (nf.size() == 1) out.push_back({x, y, nf[0]});
    }
  return out;
}

/// The H-part of a presented Δ-groupoid.  Throws StructuralError if some
/// arrow is not in normal form (two elements of H were identified, or an
/// element of H became trivial).
template <class Solver>
DeltaTable delta_table(const DeltaPresentation& p, const Solver& rs) {
  const std::size_t n = p.num_arrows();
  for (std::size_t x = 0; x < n; ++x) {
    const ArrowWord w{static_cast<std::uint32_t>(x)};
    if (rs.normal_form(w) != w)
      throw StructuralError("arrow " + p.arrow_names[x] +
                            " is identified with another element");
  }
  DeltaTable t;
  t.num_objects = p.num_nodes();
  t.object_names = p.node_names;
  t.names = p.arrow_names;
  t.dom = p.dom;
  t.cod = p.cod;
  t.inv = p.inv;
  t.j = p.j;
  t.prod.assign(n * n, DeltaTable::none);
  for (const auto& e : h_composable_pairs(p, rs)) t.prod[e.x * n + e.y] = e.xy;
  t.finalize();
  return t;
}

/// The H-part with exactly the listed products μ as its H-composable pairs.
/// No word problem is solved: distinctness of the arrows and saturation are
/// assumed (check them with `delta_table(p, solver)` / `is_saturated`).
inline DeltaTable mu_table(const DeltaPresentation& p) {
  const std::size_t n = p.num_arrows();
  DeltaTable t;
  t.num_objects = p.num_nodes();
  t.object_names = p.node_names;
  t.names = p.arrow_names;
  t.dom = p.dom;
  t.cod = p.cod;
  t.inv = p.inv;
  t.j = p.j;
  t.prod.assign(n * n, DeltaTable::none);
  for (const auto& e : p.products) t.prod[e.x * n + e.y] = e.xy;
  t.finalize();
  return t;
}

/// True if the product table μ of the presentation already lists every
/// H-composable pair.
template <class Solver>
bool is_saturated(const DeltaPresentation& p, const Solver& rs) {
  return h_composable_pairs(p, rs).size() == p.products.size();
}

namespace detail {

// Elements of a presented groupoid: normal-form words with endpoints.
struct PresentedElement {
  ArrowWord word;
  std::size_t dom = 0, cod = 0;
  friend bool operator==(const PresentedElement& a, const PresentedElement& b) {
    return a.word == b.word && a.dom == b.dom && a.cod == b.cod;
  }
};

template <class Solver>
struct PresentedModel {
  using Elem = PresentedElement;
  const DeltaPresentation& p;
  const Solver& rs;

  std::size_t h_size() const { return p.num_arrows(); }
  Elem h_elem(std::size_t x) const {
    return {{static_cast<std::uint32_t>(x)}, p.dom[x], p.cod[x]};
  }
  std::optional<std::size_t> h_index(const Elem& e) const {
    if (e.word.size() != 1) return std::nullopt;
    return e.word[0];
  }
  std::size_t dom(const Elem& e) const { return e.dom; }
  std::size_t cod(const Elem& e) const { return e.cod; }
  std::optional<Elem> compose(const Elem& a, const Elem& b) const {
    if (a.cod != b.dom) return std::nullopt;
    ArrowWord w = a.word;
    w.insert(w.end(), b.word.begin(), b.word.end());
    return Elem{rs.normal_form(std::move(w)), a.dom, b.cod};
  }
  Elem inverse(const Elem& e) const {
    ArrowWord w;
    for (auto it = e.word.rbegin(); it != e.word.rend(); ++it)
      w.push_back(static_cast<std::uint32_t>(p.inv[*it]));
    return {rs.normal_form(std::move(w)), e.cod, e.dom};
  }
  bool is_identity(const Elem& e) const { return e.word.empty(); }
  std::size_t j(std::size_t x) const { return p.j[x]; }
  std::string name(const Elem& e) const {
    if (e.word.empty()) return "1_" + p.node_names[e.dom];
    std::string s;
    for (std::size_t q = 0; q < e.word.size(); ++q) {
      if (q) s += ".";
      s += p.arrow_names[e.word[q]];
    }
    return s;
  }
};

}  // namespace detail

/// Axioms (i)-(iv) for a presented Δ-groupoid, with equality decided by the
/// rewriting system.
template <class Solver>
AxiomReport check_axioms(const DeltaPresentation& p, const Solver& rs) {
  AxiomReport report;
  check_delta_axioms(detail::PresentedModel<Solver>{p, rs}, report);
  return report;
}

inline ArrowWord normal_form(const DeltaPresentation& p, const ArrowWord& word) {
  return GroupoidWordProblem(p).normal_form(word);
}

inline std::vector<ProductEntry> h_composable_pairs(const DeltaPresentation& p) {
  return h_composable_pairs(p, GroupoidWordProblem(p));
}

inline DeltaTable delta_table(const DeltaPresentation& p) {
  return delta_table(p, GroupoidWordProblem(p));
}

}  // namespace dgw
