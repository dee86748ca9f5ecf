#pragma once

// Explicit finite Δ-groupoids.
//
// Morphisms are numbered 0..n-1.  compose(x, y) is the product "xy", defined
// when cod(x) = dom(y) (x first, then y).  H is a subset of the morphisms and
// j is stored as an explicit table on H.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dgw/deltacore/axioms.hpp"
#include "dgw/error.hpp"

namespace dgw {

class FiniteDeltaGroupoid {
 public:
  static constexpr std::size_t none = std::numeric_limits<std::size_t>::max();

  /// Raw description used to construct a groupoid.
  struct Data {
    std::size_t num_objects = 0;
    std::vector<std::string> object_names;  // optional; defaults to "O<k>"
    std::vector<std::string> names;         // one per morphism
    std::vector<std::size_t> dom, cod;      // one per morphism
    /// Row-major n x n; compose[x*n+y] = xy, or `none` when cod(x) != dom(y).
    std::vector<std::size_t> compose;
    std::vector<std::size_t> h;  // morphism indices in H
    std::vector<std::size_t> j;  // parallel to h: j(h[k]) = j[k]
  };

  FiniteDeltaGroupoid() = default;

  /// Validates the shape of the data (indices, domains of products) and
  /// locates identities and inverses.  Throws StructuralError when some
  /// object has no identity or some morphism has no inverse.
  explicit FiniteDeltaGroupoid(Data d) : d_(std::move(d)) {
    const std::size_t n = d_.names.size();
    const std::size_t m = d_.num_objects;
    if (d_.object_names.empty()) {
      for (std::size_t a = 0; a < m; ++a)
        d_.object_names.push_back("O" + std::to_string(a));
    }
    if (d_.object_names.size() != m || d_.dom.size() != n ||
        d_.cod.size() != n || d_.compose.size() != n * n ||
        d_.h.size() != d_.j.size()) {
      throw ValidationError("groupoid data has inconsistent sizes");
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (d_.dom[x] >= m || d_.cod[x] >= m)
        throw ValidationError("morphism " + d_.names[x] + " has a bad endpoint");
      for (std::size_t y = 0; y < n; ++y) {
        std::size_t p = d_.compose[x * n + y];
        bool composable = d_.cod[x] == d_.dom[y];
        if (composable != (p != none)) {
          throw ValidationError("composition of " + d_.names[x] + " and " +
                                d_.names[y] +
                                (composable ? " is missing" : " should be undefined"));
        }
        if (p != none && (p >= n || d_.dom[p] != d_.dom[x] ||
                          d_.cod[p] != d_.cod[y])) {
          throw ValidationError("product of " + d_.names[x] + " and " +
                                d_.names[y] + " has wrong endpoints");
        }
      }
    }
    identity_.assign(m, none);
    for (std::size_t x = 0; x < n; ++x) {
      if (d_.dom[x] == d_.cod[x] && compose(x, x) == x) identity_[d_.dom[x]] = x;
    }
    for (std::size_t a = 0; a < m; ++a)
      if (identity_[a] == none)
        throw StructuralError("object " + d_.object_names[a] + " has no identity");
    inverse_.assign(n, none);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n && inverse_[x] == none; ++y)
        if (compose(x, y) == identity_[d_.dom[x]] &&
            compose(y, x) == identity_[d_.cod[x]])
          inverse_[x] = y;
    for (std::size_t x = 0; x < n; ++x)
      if (inverse_[x] == none)
        throw StructuralError("morphism " + d_.names[x] + " has no inverse");
    j_.assign(n, none);
    h_index_.assign(n, none);
    std::vector<std::pair<std::size_t, std::size_t>> hj;
    for (std::size_t k = 0; k < d_.h.size(); ++k) {
      if (d_.h[k] >= n || d_.j[k] >= n)
        throw ValidationError("H or j refers to a missing morphism");
      hj.emplace_back(d_.h[k], d_.j[k]);
    }
    std::sort(hj.begin(), hj.end());
    for (std::size_t k = 0; k < hj.size(); ++k) {
      if (k > 0 && hj[k].first == hj[k - 1].first)
        throw ValidationError("morphism listed twice in H");
      h_.push_back(hj[k].first);
      j_[hj[k].first] = hj[k].second;
      h_index_[hj[k].first] = k;
    }
  }

  std::size_t num_morphisms() const noexcept { return d_.names.size(); }
  std::size_t num_objects() const noexcept { return d_.num_objects; }
  bool empty() const noexcept { return d_.names.empty() && d_.num_objects == 0; }

  std::size_t dom(std::size_t x) const { return d_.dom[x]; }
  std::size_t cod(std::size_t x) const { return d_.cod[x]; }
  /// xy, or `none` when not composable.
  std::size_t compose(std::size_t x, std::size_t y) const {
    return d_.compose[x * num_morphisms() + y];
  }
  std::size_t inverse(std::size_t x) const { return inverse_[x]; }
  std::size_t identity(std::size_t object) const { return identity_[object]; }
  bool is_identity(std::size_t x) const { return identity_[d_.dom[x]] == x; }

  /// H as a sorted list of morphism indices.
  const std::vector<std::size_t>& h() const noexcept { return h_; }
  bool in_h(std::size_t x) const { return h_index_[x] != none; }
  /// Position of x in h(), or `none`.
  std::size_t h_position(std::size_t x) const { return h_index_[x]; }
  /// j(x) for x in H; `none` otherwise.
  std::size_t j(std::size_t x) const { return j_[x]; }
  /// k = iji.
  std::size_t k(std::size_t x) const {
    std::size_t y = j_[inverse_[x]];
    return y == none ? none : inverse_[y];
  }

  const std::string& name(std::size_t x) const { return d_.names[x]; }
  const std::string& object_name(std::size_t a) const {
    return d_.object_names[a];
  }
  const Data& data() const noexcept { return d_; }

  /// Copy with j replaced by `new_j` (indexed by morphism; only H entries
  /// are used).  Intended for negative-control tests.
  FiniteDeltaGroupoid with_j(const std::vector<std::size_t>& new_j) const {
    Data d = d_;
    for (std::size_t k = 0; k < d.h.size(); ++k) d.j[k] = new_j[d.h[k]];
    return FiniteDeltaGroupoid(std::move(d));
  }

 private:
  Data d_;
  std::vector<std::size_t> identity_, inverse_, j_, h_index_, h_;
};

namespace detail {

struct FiniteModel {
  using Elem = std::size_t;
  const FiniteDeltaGroupoid& g;
  std::size_t h_size() const { return g.h().size(); }
  Elem h_elem(std::size_t x) const { return g.h()[x]; }
  std::optional<std::size_t> h_index(const Elem& e) const {
    std::size_t p = g.h_position(e);
    if (p == FiniteDeltaGroupoid::none) return std::nullopt;
    return p;
  }
  std::size_t dom(const Elem& e) const { return g.dom(e); }
  std::size_t cod(const Elem& e) const { return g.cod(e); }
  std::optional<Elem> compose(const Elem& a, const Elem& b) const {
    std::size_t p = g.compose(a, b);
    if (p == FiniteDeltaGroupoid::none) return std::nullopt;
    return p;
  }
  Elem inverse(const Elem& e) const { return g.inverse(e); }
  bool is_identity(const Elem& e) const { return g.is_identity(e); }
  std::size_t j(std::size_t x) const {
    std::size_t y = g.j(g.h()[x]);
    std::size_t p = g.h_position(y);
    return p == FiniteDeltaGroupoid::none ? h_size() : p;
  }
  std::string name(const Elem& e) const { return g.name(e); }
};

}  // namespace detail

/// Full axiom check of a finite Δ-groupoid: groupoid laws, generation by H,
/// and axioms (i)-(iv).
inline AxiomReport check_axioms(const FiniteDeltaGroupoid& g) {
  AxiomReport report;
  const std::size_t n = g.num_morphisms();
  for (std::size_t x = 0; x < n; ++x) {
    if (g.compose(g.identity(g.dom(x)), x) != x ||
        g.compose(x, g.identity(g.cod(x))) != x)
      report.add("groupoid", "identity law fails at " + g.name(x));
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t xy = g.compose(x, y);
      if (xy == FiniteDeltaGroupoid::none) continue;
      for (std::size_t z = 0; z < n; ++z) {
        std::size_t yz = g.compose(y, z);
        if (yz == FiniteDeltaGroupoid::none) continue;
        if (g.compose(xy, z) != g.compose(x, yz))
          report.add("groupoid", "associativity fails at (" + g.name(x) +
                                     ", " + g.name(y) + ", " + g.name(z) + ")");
      }
    }
  }
  // generation: closure of H under composition must reach every morphism
  std::vector<bool> reached(n, false);
  std::vector<std::size_t> frontier;
  for (std::size_t x : g.h()) {
    reached[x] = true;
    frontier.push_back(x);
  }
  while (!frontier.empty()) {
    std::size_t x = frontier.back();
    frontier.pop_back();
    for (std::size_t y : g.h()) {
      for (std::size_t p : {g.compose(x, y), g.compose(y, x)}) {
        if (p != FiniteDeltaGroupoid::none && !reached[p]) {
          reached[p] = true;
          frontier.push_back(p);
        }
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    if (!reached[x])
      report.add("generation", g.name(x) + " is not a composite of H-elements");
  check_delta_axioms(detail::FiniteModel{g}, report);
  return report;
}

/// A* = dom(j(x)) for any x in H with dom(x) = A.  Throws StructuralError if
/// no such x exists or if different choices disagree.
inline std::size_t object_involution(const FiniteDeltaGroupoid& g,
                                     std::size_t object) {
  std::size_t result = FiniteDeltaGroupoid::none;
  for (std::size_t x : g.h()) {
    if (g.dom(x) != object) continue;
    std::size_t a = g.dom(g.j(x));
    if (result == FiniteDeltaGroupoid::none) {
      result = a;
    } else if (result != a) {
      throw StructuralError("object involution is not well defined at " +
                            g.object_name(object));
    }
  }
  if (result == FiniteDeltaGroupoid::none)
    throw StructuralError("no element of H starts at " + g.object_name(object));
  return result;
}

}  // namespace dgw
