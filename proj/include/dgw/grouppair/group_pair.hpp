#pragma once

// Finite group pairs (G, H) and the Δ-groupoid of a malnormal pair.
//
// H^3 acts on (G \ H)^2 by (g1, g2)·(h1, h2, h3) = (h1^-1 g1 h2, h1^-1 g2 h3);
// for malnormal H the action is free.  The orbits are the morphisms, the
// double cosets HgH (g not in H) the objects, with dom = H g1 H and
// cod = H g2 H.  Composition of (f1, f2) and (g1, g2) with H f2 H = H g1 H is
// the orbit of (f1, h0 g2), h0 in H being the unique element with
// f2 H = h0 g1 H.  Units are the orbits of (g, g), the inverse of (g1, g2) is
// (g2, g1), and j(g1, g2) = (g1^-1, g1^-1 g2) on the non-unit orbits, which
// form the distinguished subset.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dgw/deltacore/finite_groupoid.hpp"
#include "dgw/deltacore/finite_structures.hpp"
#include "dgw/error.hpp"

namespace dgw {

struct GroupPair {
  GroupTable group;
  std::vector<std::size_t> subgroup;  // sorted

  /// Validates that `subgroup` is a subgroup of `group`.
  GroupPair(GroupTable g, std::vector<std::size_t> h) : group(std::move(g)), subgroup(std::move(h)) {
    std::sort(subgroup.begin(), subgroup.end());
    subgroup.erase(std::unique(subgroup.begin(), subgroup.end()), subgroup.end());
    member_.assign(group.order(), false);
    for (std::size_t x : subgroup) {
      if (x >= group.order()) throw ValidationError("subgroup element out of range");
      member_[x] = true;
    }
    if (!contains(group.identity())) throw ValidationError("subgroup lacks the identity");
    for (std::size_t a : subgroup) {
      if (!contains(group.inverse(a)))
        throw ValidationError("subgroup is not closed under inverses at " + group.name(a));
      for (std::size_t b : subgroup)
        if (!contains(group.mul(a, b)))
          throw ValidationError("subgroup is not closed under products at " + group.name(a) +
                                ", " + group.name(b));
    }
  }

  /// The subgroup generated by the named elements.
  static GroupPair generated(GroupTable g, const std::vector<std::string>& gens) {
    std::vector<std::size_t> idx;
    for (const auto& s : gens) idx.push_back(g.find(s));
    auto h = g.generated_subgroup(idx);
    return GroupPair(std::move(g), std::move(h));
  }

  bool contains(std::size_t x) const { return member_[x]; }
  bool proper() const { return subgroup.size() < group.order(); }

 private:
  std::vector<bool> member_;
};

struct MalnormalityResult {
  bool malnormal = false;
  /// On failure: g not in H and h in H \ {1} with g h g^-1 in H (absent when
  /// the failure is H = G).
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  std::string reason;
};

/// H is malnormal when g H g^-1 ∩ H = {1} for every g not in H.  H = G with
/// |G| > 1 is reported as not malnormal (there is nothing to conjugate by,
/// and the construction below needs a proper subgroup).
inline MalnormalityResult is_malnormal(const GroupPair& pair) {
  const GroupTable& g = pair.group;
  MalnormalityResult res;
  if (!pair.proper() && g.order() > 1) {
    res.reason = "H = G";
    return res;
  }
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (pair.contains(x)) continue;
    for (std::size_t h : pair.subgroup) {
      if (h == g.identity()) continue;
      if (pair.contains(g.mul(g.mul(x, h), g.inverse(x)))) {
        res.witness = std::pair{x, h};
        res.reason = "g = " + g.name(x) + " conjugates h = " + g.name(h) + " into H";
        return res;
      }
    }
  }
  res.malnormal = true;
  return res;
}

struct PairDelta {
  FiniteDeltaGroupoid groupoid;
  /// orbit[g1 * |G| + g2] = morphism index of the orbit of (g1, g2), or
  /// FiniteDeltaGroupoid::none when g1 or g2 lies in H.
  std::vector<std::size_t> orbit;
  /// Lexicographically least representative of each orbit.
  std::vector<std::pair<std::size_t, std::size_t>> representative;
  std::size_t group_order = 0;

  std::size_t orbit_of(std::size_t g1, std::size_t g2) const {
    return orbit.at(g1 * group_order + g2);
  }
};

/// Builds the Δ-groupoid of a proper malnormal pair, verifying that every
/// orbit has exactly |H|^3 elements.
inline PairDelta build_pair_delta(const GroupPair& pair) {
  const GroupTable& g = pair.group;
  const std::size_t n = g.order();
  const std::size_t none = FiniteDeltaGroupoid::none;
  if (!pair.proper()) throw ValidationError("the subgroup must be proper");
  auto mal = is_malnormal(pair);
  if (!mal.malnormal) throw ValidationError("the subgroup is not malnormal: " + mal.reason);
  const auto& hs = pair.subgroup;
  auto inv = [&](std::size_t a) { return g.inverse(a); };
  auto mul = [&](std::size_t a, std::size_t b) { return g.mul(a, b); };

  // objects: double cosets
  std::vector<std::size_t> coset(n, none);
  std::vector<std::size_t> coset_rep;
  for (std::size_t x = 0; x < n; ++x) {
    if (pair.contains(x) || coset[x] != none) continue;
    const std::size_t id = coset_rep.size();
    coset_rep.push_back(x);
    for (std::size_t a : hs)
      for (std::size_t b : hs) coset[mul(mul(a, x), b)] = id;
  }

  PairDelta out;
  out.group_order = n;
  out.orbit.assign(n * n, none);
  const std::size_t expected = hs.size() * hs.size() * hs.size();
  for (std::size_t g1 = 0; g1 < n; ++g1) {
    if (pair.contains(g1)) continue;
    for (std::size_t g2 = 0; g2 < n; ++g2) {
      if (pair.contains(g2) || out.orbit[g1 * n + g2] != none) continue;
      const std::size_t id = out.representative.size();
      out.representative.emplace_back(g1, g2);
      std::vector<std::pair<std::size_t, std::size_t>> members;
      for (std::size_t h1 : hs)
        for (std::size_t h2 : hs)
          for (std::size_t h3 : hs)
            members.emplace_back(mul(mul(inv(h1), g1), h2), mul(mul(inv(h1), g2), h3));
      std::sort(members.begin(), members.end());
      const std::size_t distinct = static_cast<std::size_t>(
          std::unique(members.begin(), members.end()) - members.begin());
      if (distinct != expected)
        throw ComputationError("the H^3 action is not free on the orbit of (" + g.name(g1) + ", " +
                               g.name(g2) + ")");
      for (std::size_t k = 0; k < distinct; ++k)
        out.orbit[members[k].first * n + members[k].second] = id;
    }
  }

  const std::size_t m = out.representative.size();
  FiniteDeltaGroupoid::Data d;
  d.num_objects = coset_rep.size();
  for (std::size_t c : coset_rep) d.object_names.push_back("H" + g.name(c) + "H");
  d.compose.assign(m * m, none);
  for (std::size_t x = 0; x < m; ++x) {
    auto [g1, g2] = out.representative[x];
    d.names.push_back("(" + g.name(g1) + "," + g.name(g2) + ")");
    d.dom.push_back(coset[g1]);
    d.cod.push_back(coset[g2]);
  }
  for (std::size_t x = 0; x < m; ++x) {
    auto [f1, f2] = out.representative[x];
    for (std::size_t y = 0; y < m; ++y) {
      auto [g1, g2] = out.representative[y];
      if (coset[f2] != coset[g1]) continue;
      // h0 with f2^-1 h0 g1 in H
      std::optional<std::size_t> h0;
      for (std::size_t h : hs)
        if (pair.contains(mul(mul(inv(f2), h), g1))) {
          if (h0) throw ComputationError("composition factor h0 is not unique");
          h0 = h;
        }
      if (!h0) throw ComputationError("no composition factor h0 for composable orbits");
      d.compose[x * m + y] = out.orbit_of(f1, mul(*h0, g2));
    }
  }
  for (std::size_t x = 0; x < m; ++x) {
    auto [g1, g2] = out.representative[x];
    if (pair.contains(mul(inv(g1), g2))) continue;  // unit orbit
    d.h.push_back(x);
    d.j.push_back(out.orbit_of(inv(g1), mul(inv(g1), g2)));
  }
  // j must not depend on the representative
  for (std::size_t g1 = 0; g1 < n; ++g1)
    for (std::size_t g2 = 0; g2 < n; ++g2) {
      const std::size_t x = out.orbit[g1 * n + g2];
      if (x == none || pair.contains(mul(inv(g1), g2))) continue;
      const std::size_t jx = out.orbit_of(inv(g1), mul(inv(g1), g2));
      const auto pos = std::find(d.h.begin(), d.h.end(), x) - d.h.begin();
      if (d.j[static_cast<std::size_t>(pos)] != jx)
        throw ComputationError("j depends on the orbit representative at (" + g.name(g1) + ", " +
                               g.name(g2) + ")");
    }
  out.groupoid = FiniteDeltaGroupoid(std::move(d));
  return out;
}

inline FiniteDeltaGroupoid delta_from_pair(const GroupPair& pair) {
  return build_pair_delta(pair).groupoid;
}

}  // namespace dgw
