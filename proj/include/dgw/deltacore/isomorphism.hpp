#pragma once

// Isomorphism of Δ-groupoid tables: invariant fingerprints plus a bounded
// backtracking search for a bijection of H (and of objects) preserving dom,
// cod, i, j and the H-product table, including where it is undefined.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "dgw/deltacore/delta_table.hpp"

namespace dgw {

struct DeltaFingerprint {
  std::size_t objects = 0;
  std::size_t components = 0;
  std::size_t h_size = 0;
  std::size_t products = 0;
  std::size_t i_fixed = 0;
  std::size_t j_fixed = 0;
  std::size_t loops = 0;  // elements with dom = cod
  /// Sorted multiset of per-element profiles
  /// (left-degree, right-degree, result-degree, loop, i-fixed, j-fixed).
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, bool, bool, bool>>
      profile;

  friend bool operator==(const DeltaFingerprint&, const DeltaFingerprint&) = default;

  std::string to_string() const {
    return "objects=" + std::to_string(objects) +
           " components=" + std::to_string(components) +
           " H=" + std::to_string(h_size) + " products=" + std::to_string(products) +
           " i-fixed=" + std::to_string(i_fixed) +
           " j-fixed=" + std::to_string(j_fixed) + " loops=" + std::to_string(loops);
  }
};

namespace detail {

inline std::tuple<std::size_t, std::size_t, std::size_t, bool, bool, bool>
element_profile(const DeltaTable& t, std::size_t x) {
  std::size_t left = 0, right = 0, result = 0;
  for (std::size_t y = 0; y < t.size(); ++y) {
    if (t.h_composable(x, y)) ++left;
    if (t.h_composable(y, x)) ++right;
    for (std::size_t z = 0; z < t.size(); ++z)
      if (t.product(y, z) == x) ++result;
  }
  return {left, right, result, t.dom[x] == t.cod[x], t.inv[x] == x, t.j[x] == x};
}

}  // namespace detail

inline DeltaFingerprint fingerprint(const DeltaTable& t) {
  DeltaFingerprint f;
  f.objects = t.num_objects;
  f.components = t.num_components;
  f.h_size = t.size();
  for (std::size_t x = 0; x < t.size(); ++x) {
    if (t.inv[x] == x) ++f.i_fixed;
    if (t.j[x] == x) ++f.j_fixed;
    if (t.dom[x] == t.cod[x]) ++f.loops;
    for (std::size_t y = 0; y < t.size(); ++y)
      if (t.h_composable(x, y)) ++f.products;
    f.profile.push_back(detail::element_profile(t, x));
  }
  std::sort(f.profile.begin(), f.profile.end());
  return f;
}

/// An isomorphism a -> b: images of H-elements and of objects.
struct DeltaIsomorphism {
  std::vector<std::size_t> h_map;
  std::vector<std::size_t> object_map;
};

namespace detail {

class IsoSearch {
 public:
  IsoSearch(const DeltaTable& a, const DeltaTable& b, std::size_t node_budget)
      : a_(a), b_(b), budget_(node_budget) {
    for (std::size_t x = 0; x < a.size(); ++x) pa_.push_back(element_profile(a, x));
    for (std::size_t x = 0; x < b.size(); ++x) pb_.push_back(element_profile(b, x));
    map_.assign(a.size(), none);
    used_.assign(b.size(), false);
    obj_.assign(a.num_objects, none);
    obj_used_.assign(b.num_objects, false);
  }

  std::optional<DeltaIsomorphism> run() {
    if (!search(0)) return std::nullopt;
    return DeltaIsomorphism{map_, obj_};
  }

  bool exhausted() const { return budget_ == 0; }

 private:
  static constexpr std::size_t none = DeltaTable::none;

  // Assigns x -> y and propagates through i and j; records the trail.
  bool assign(std::size_t x, std::size_t y, std::vector<std::size_t>& trail,
              std::vector<std::size_t>& obj_trail) {
    std::vector<std::pair<std::size_t, std::size_t>> work{{x, y}};
    while (!work.empty()) {
      auto [u, v] = work.back();
      work.pop_back();
      if (map_[u] != none) {
        if (map_[u] != v) return false;
        continue;
      }
      if (used_[v] || pa_[u] != pb_[v]) return false;
      for (auto [oa, ob] : {std::pair{a_.dom[u], b_.dom[v]},
                            std::pair{a_.cod[u], b_.cod[v]}}) {
        if (obj_[oa] == none) {
          if (obj_used_[ob]) return false;
          obj_[oa] = ob;
          obj_used_[ob] = true;
          obj_trail.push_back(oa);
        } else if (obj_[oa] != ob) {
          return false;
        }
      }
      map_[u] = v;
      used_[v] = true;
      trail.push_back(u);
      work.emplace_back(a_.inv[u], b_.inv[v]);
      work.emplace_back(a_.j[u], b_.j[v]);
    }
    // products among assigned elements must correspond
    for (std::size_t u : trail) {
      for (std::size_t w = 0; w < a_.size(); ++w) {
        if (map_[w] == none) continue;
        for (auto [p, q] : {std::pair{u, w}, std::pair{w, u}}) {
          std::size_t pa = a_.product(p, q);
          std::size_t pb = b_.product(map_[p], map_[q]);
          if ((pa == none) != (pb == none)) return false;
          if (pa != none && map_[pa] != none && map_[pa] != pb) return false;
        }
      }
    }
    return true;
  }

  void undo(const std::vector<std::size_t>& trail,
            const std::vector<std::size_t>& obj_trail) {
    for (std::size_t u : trail) {
      used_[map_[u]] = false;
      map_[u] = none;
    }
    for (std::size_t o : obj_trail) {
      obj_used_[obj_[o]] = false;
      obj_[o] = none;
    }
  }

  bool search(std::size_t x) {
    while (x < a_.size() && map_[x] != none) ++x;
    if (x == a_.size()) return full_check();
    for (std::size_t y = 0; y < b_.size(); ++y) {
      if (used_[y] || pa_[x] != pb_[y]) continue;
      if (budget_ == 0) return false;
      --budget_;
      std::vector<std::size_t> trail, obj_trail;
      if (assign(x, y, trail, obj_trail) && search(x + 1)) return true;
      undo(trail, obj_trail);
    }
    return false;
  }

  bool full_check() const {
    for (std::size_t o = 0; o < a_.num_objects; ++o)
      if (obj_[o] == none) return false;
    for (std::size_t u = 0; u < a_.size(); ++u)
      for (std::size_t w = 0; w < a_.size(); ++w) {
        std::size_t pa = a_.product(u, w);
        std::size_t pb = b_.product(map_[u], map_[w]);
        if (pa == none ? pb != none : pb != map_[pa]) return false;
      }
    return true;
  }

  const DeltaTable& a_;
  const DeltaTable& b_;
  std::size_t budget_;
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, bool, bool, bool>> pa_, pb_;
  std::vector<std::size_t> map_, obj_;
  std::vector<bool> used_, obj_used_;
};

}  // namespace detail

/// Searches for an isomorphism a -> b.  Returns nullopt if fingerprints
/// differ or no bijection exists.  Throws ComputationError if the search
/// budget runs out before a decision.
inline std::optional<DeltaIsomorphism> find_isomorphism(
    const DeltaTable& a, const DeltaTable& b, std::size_t node_budget = 1000000) {
  if (!(fingerprint(a) == fingerprint(b))) return std::nullopt;
  detail::IsoSearch s(a, b, node_budget);
  auto r = s.run();
  if (!r && s.exhausted())
    throw ComputationError("isomorphism search budget exhausted");
  return r;
}

}  // namespace dgw
