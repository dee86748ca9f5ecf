#pragma once

// Tetrahedral objects and the completion of a triangulation into a
// presented Δ-groupoid.
//
// A tetrahedral object is an S3-equivariant map a: V -> I from an S4-set V
// (restricted to S3) to an S3-set I.  Both sets are finite and stored with
// the actions of the elementary transpositions: s1, s2, s3 on V and s1, s2
// on I.  With c = (321) = s3 s2,
//
//   τ(v) = (a(v), a(c v)),      product  μ(τ(v)) = a(s3 v).
//
// Completion alternates two quotients until nothing changes:
//   tilde:  the least S4-equivariant equivalence on V identifying elements
//           with equal τ, and its a-image on I;
//   assoc:  the least S3-equivariant equivalence on I forcing
//           (xy)z = x(yz) whenever both sides are defined.
// The resulting object gives a quiver (arrows = I, nodes = I modulo
// i(x) ~ y for (x,y) in V, dom = class, cod = dom ∘ i) with i = s2, j = s1.

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dgw/deltacore/presentation.hpp"
#include "dgw/error.hpp"
#include "dgw/perm.hpp"
#include "dgw/tetra/triangulation.hpp"

namespace dgw {

struct TetObject {
  std::vector<std::array<std::size_t, 3>> v_act;  // s1, s2, s3 on V
  std::vector<std::array<std::size_t, 2>> i_act;  // s1, s2 on I
  std::vector<std::size_t> a;                     // V -> I
  std::vector<std::string> i_names;               // labels for I

  std::size_t v_size() const noexcept { return v_act.size(); }
  std::size_t i_size() const noexcept { return i_act.size(); }

  /// c v with c = (321) = s3 s2.
  std::size_t cycle(std::size_t v) const { return v_act[v_act[v][1]][2]; }
  std::pair<std::size_t, std::size_t> tau(std::size_t v) const {
    return {a[v], a[cycle(v)]};
  }
  std::size_t product_of(std::size_t v) const { return a[v_act[v][2]]; }

  /// Checks a(s v) = s a(v) for s = s1, s2 and that the generators act by
  /// involutions.  Returns a description of the first failure, or "".
  std::string equivariance_failure() const {
    for (std::size_t v = 0; v < v_size(); ++v) {
      for (std::size_t g = 0; g < 3; ++g)
        if (v_act[v_act[v][g]][g] != v) return "s" + std::to_string(g + 1) + " is not an involution on V";
      for (std::size_t g = 0; g < 2; ++g)
        if (a[v_act[v][g]] != i_act[a[v]][g])
          return "a is not equivariant under s" + std::to_string(g + 1) +
                 " at V-element " + std::to_string(v);
    }
    for (std::size_t x = 0; x < i_size(); ++x)
      for (std::size_t g = 0; g < 2; ++g)
        if (i_act[i_act[x][g]][g] != x) return "s" + std::to_string(g + 1) + " is not an involution on I";
    return "";
  }

  bool tau_injective() const {
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;
    for (std::size_t v = 0; v < v_size(); ++v)
      if (!seen.emplace(tau(v), v).second) return false;
    return true;
  }
};

/// The object of a triangulation: V = S4 x tetrahedra, I = S3 x faces,
/// a(g, t) = (g restricted to {0..3} minus g^-1(3), ∂_{g^-1(3)} t), which is
/// the S3-equivariant extension of a((i3), t) = (g_i, ∂_i t) with
/// g_0 = (012), g_1 = (12), g_2 = g_3 = 1.
inline TetObject build_tet_object(const Triangulation& tri) {
  tri.validate();
  const auto s4 = Perm::all(4);
  const auto s3 = Perm::all(3);
  std::map<Perm, std::size_t> i4, i3;
  for (std::size_t k = 0; k < s4.size(); ++k) i4.emplace(s4[k], k);
  for (std::size_t k = 0; k < s3.size(); ++k) i3.emplace(s3[k], k);
  const auto faces = tri.face_names();
  std::map<std::string, std::size_t> fidx;
  for (std::size_t f = 0; f < faces.size(); ++f) fidx.emplace(faces[f], f);

  TetObject o;
  const std::size_t nt = tri.tets.size();
  o.v_act.resize(24 * nt);
  o.a.resize(24 * nt);
  for (std::size_t t = 0; t < nt; ++t)
    for (std::size_t g = 0; g < 24; ++g) {
      std::size_t v = t * 24 + g;
      for (std::size_t s = 0; s < 3; ++s)
        o.v_act[v][s] = t * 24 + i4.at(transposition(s + 1) * s4[g]);
      auto img = s4[g].images(4);
      std::size_t gap = s4[g].inverse()(3);
      std::vector<std::size_t> h;
      for (std::size_t q = 0; q < 3; ++q) h.push_back(img[q < gap ? q : q + 1]);
      o.a[v] = fidx.at(tri.tets[t].faces[gap]) * 6 + i3.at(Perm(h));
    }
  o.i_act.resize(6 * faces.size());
  for (std::size_t f = 0; f < faces.size(); ++f)
    for (std::size_t h = 0; h < 6; ++h) {
      std::size_t x = f * 6 + h;
      for (std::size_t s = 0; s < 2; ++s)
        o.i_act[x][s] = f * 6 + i3.at(transposition(s + 1) * s3[h]);
      o.i_names.push_back(faces[f] + ":" + s3[h].to_string());
    }
  return o;
}

struct CompletionStage {
  std::string label;  // "tilde" or "assoc"
  std::size_t v_size = 0, i_size = 0;
  std::size_t merges = 0;
};

struct CompletionTrace {
  std::vector<CompletionStage> stages;
  std::size_t rounds = 0;
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  /// Merges so that the smaller index is the root; true if merged.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a < b) parent_[b] = a;
    else parent_[a] = b;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

// Equivariant quotient state over a fixed object.
class QuotientState {
 public:
  explicit QuotientState(const TetObject& o) : o_(o), uv_(o.v_size()), ui_(o.i_size()) {}

  std::size_t merge_i(std::size_t x, std::size_t y) {
    std::size_t merges = 0;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{x, y}};
    while (!stack.empty()) {
      auto [p, q] = stack.back();
      stack.pop_back();
      if (!ui_.unite(p, q)) continue;
      ++merges;
      for (std::size_t g = 0; g < 2; ++g)
        stack.emplace_back(o_.i_act[p][g], o_.i_act[q][g]);
    }
    return merges;
  }

  std::size_t merge_v(std::size_t v, std::size_t w) {
    std::size_t merges = 0;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{v, w}};
    while (!stack.empty()) {
      auto [p, q] = stack.back();
      stack.pop_back();
      if (!uv_.unite(p, q)) continue;
      ++merges;
      merges += merge_i(o_.a[p], o_.a[q]);
      for (std::size_t g = 0; g < 3; ++g)
        stack.emplace_back(o_.v_act[p][g], o_.v_act[q][g]);
    }
    return merges;
  }

  std::size_t fv(std::size_t v) { return uv_.find(v); }
  std::size_t fi(std::size_t x) { return ui_.find(x); }

  /// The quotient object; classes ordered by their smallest member.
  TetObject compact() {
    std::vector<std::size_t> vmap(o_.v_size(), 0), imap(o_.i_size(), 0);
    std::vector<std::size_t> vreps, ireps;
    for (std::size_t v = 0; v < o_.v_size(); ++v)
      if (fv(v) == v) {
        vmap[v] = vreps.size();
        vreps.push_back(v);
      }
    for (std::size_t x = 0; x < o_.i_size(); ++x)
      if (fi(x) == x) {
        imap[x] = ireps.size();
        ireps.push_back(x);
      }
    TetObject out;
    for (std::size_t v : vreps) {
      std::array<std::size_t, 3> act{};
      for (std::size_t g = 0; g < 3; ++g) act[g] = vmap[fv(o_.v_act[v][g])];
      out.v_act.push_back(act);
      out.a.push_back(imap[fi(o_.a[v])]);
    }
    for (std::size_t x : ireps) {
      std::array<std::size_t, 2> act{};
      for (std::size_t g = 0; g < 2; ++g) act[g] = imap[fi(o_.i_act[x][g])];
      out.i_act.push_back(act);
      out.i_names.push_back(o_.i_names[x]);
    }
    return out;
  }

 private:
  const TetObject& o_;
  UnionFind uv_, ui_;
};

}  // namespace detail

/// One "tilde" stage: merges τ-collisions until τ is injective.
inline TetObject tilde(const TetObject& o, std::size_t* merges = nullptr) {
  detail::QuotientState st(o);
  std::size_t total = 0;
  for (;;) {
    std::size_t round = 0;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;
    for (std::size_t v = 0; v < o.v_size(); ++v) {
      if (st.fv(v) != v) continue;
      auto key = std::make_pair(st.fi(o.a[v]), st.fi(o.a[o.cycle(v)]));
      auto [it, fresh] = seen.emplace(key, v);
      if (!fresh) round += st.merge_v(it->second, v);
    }
    total += round;
    if (round == 0) break;
  }
  if (merges) *merges = total;
  return st.compact();
}

/// Product table of an object with injective τ: (x, y) -> xy.
inline std::map<std::pair<std::size_t, std::size_t>, std::size_t> product_table(
    const TetObject& o) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> mu;
  for (std::size_t v = 0; v < o.v_size(); ++v) {
    auto [it, fresh] = mu.emplace(o.tau(v), o.product_of(v));
    if (!fresh && it->second != o.product_of(v))
      throw StructuralError("τ is not injective; the product is not defined");
  }
  return mu;
}

/// One "assoc" stage: identifies (xy)z with x(yz) (S3-equivariantly) for
/// every triple where both sides are defined.  Requires injective τ.
inline TetObject assoc_quotient(const TetObject& o, std::size_t* merges = nullptr) {
  auto mu = product_table(o);
  detail::QuotientState st(o);
  std::size_t total = 0;
  for (const auto& [xy_pair, xy] : mu) {
    auto [x, y] = xy_pair;
    for (auto it = mu.lower_bound({y, 0}); it != mu.end() && it->first.first == y; ++it) {
      std::size_t z = it->first.second, yz = it->second;
      auto l = mu.find({xy, z});
      auto r = mu.find({x, yz});
      if (l != mu.end() && r != mu.end()) total += st.merge_i(l->second, r->second);
    }
  }
  if (merges) *merges = total;
  return st.compact();
}

/// Iterates tilde and assoc until a full round makes no identification.
inline TetObject complete_object(TetObject o, CompletionTrace* trace = nullptr) {
  for (;;) {
    std::size_t m1 = 0, m2 = 0;
    o = tilde(o, &m1);
    if (trace) trace->stages.push_back({"tilde", o.v_size(), o.i_size(), m1});
    o = assoc_quotient(o, &m2);
    if (trace) {
      trace->stages.push_back({"assoc", o.v_size(), o.i_size(), m2});
      ++trace->rounds;
    }
    if (m2 == 0) {
      // assoc changed nothing, so τ is still injective
      return o;
    }
  }
}

/// The presentation of a completed object (τ injective, product associative).
inline DeltaPresentation presentation_of(const TetObject& o) {
  auto mu = product_table(o);
  const std::size_t n = o.i_size();
  detail::UnionFind nodes(n);
  for (const auto& [p, xy] : mu) nodes.unite(o.i_act[p.first][1], p.second);
  std::vector<std::size_t> node_of(n), label(n, n);
  std::size_t count = 0;
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t r = nodes.find(x);
    if (label[r] == n) label[r] = count++;
    node_of[x] = label[r];
  }
  DeltaPresentation p;
  for (std::size_t k = 0; k < count; ++k) p.node_names.push_back("N" + std::to_string(k));
  p.arrow_names = o.i_names;
  for (std::size_t x = 0; x < n; ++x) {
    p.dom.push_back(node_of[x]);
    p.cod.push_back(node_of[o.i_act[x][1]]);
    p.inv.push_back(o.i_act[x][1]);
    p.j.push_back(o.i_act[x][0]);
  }
  for (const auto& [pair, xy] : mu) p.products.push_back({pair.first, pair.second, xy});
  p.validate();
  return p;
}

struct Completion {
  TetObject object;
  DeltaPresentation presentation;
  CompletionTrace trace;
};

inline Completion complete(const TetObject& start) {
  Completion c;
  c.object = complete_object(start, &c.trace);
  c.presentation = presentation_of(c.object);
  return c;
}

inline Completion complete(const Triangulation& tri) {
  return complete(build_tet_object(tri));
}

/// Checks the S4-action formulas on V of a completed object:
///   s1(x,y) = (j(x), j(k(x) j(y))),  s2(x,y) = (i(x), xy),  s3(x,y) = (xy, i(y)),
/// with k = (02) = s1 s2 s1.  Returns violation descriptions.
inline std::vector<std::string> check_action_formulas(const TetObject& o) {
  std::vector<std::string> out;
  auto mu = product_table(o);
  auto i = [&](std::size_t x) { return o.i_act[x][1]; };
  auto j = [&](std::size_t x) { return o.i_act[x][0]; };
  auto k = [&](std::size_t x) { return j(i(j(x))); };
  auto prod = [&](std::size_t x, std::size_t y) -> std::optional<std::size_t> {
    auto it = mu.find({x, y});
    if (it == mu.end()) return std::nullopt;
    return it->second;
  };
  for (std::size_t v = 0; v < o.v_size(); ++v) {
    auto [x, y] = o.tau(v);
    std::size_t xy = o.product_of(v);
    std::string at = "(" + o.i_names[x] + ", " + o.i_names[y] + ")";
    auto kxjy = prod(k(x), j(y));
    if (!kxjy) {
      out.push_back("k(x)j(y) undefined at " + at);
    } else if (o.tau(o.v_act[v][0]) != std::make_pair(j(x), j(*kxjy))) {
      out.push_back("s1 formula fails at " + at);
    }
    if (o.tau(o.v_act[v][1]) != std::make_pair(i(x), xy))
      out.push_back("s2 formula fails at " + at);
    if (o.tau(o.v_act[v][2]) != std::make_pair(xy, i(y)))
      out.push_back("s3 formula fails at " + at);
  }
  return out;
}

/// Checks on every product-table entry:
///   i(xy) = i(y) i(x),  k(xy) = k(k(x) j(y)) k(y),  i(x)(xy) = y,  (yx) i(x) = y.
inline std::vector<std::string> check_product_identities(const DeltaPresentation& p) {
  std::vector<std::string> out;
  for (const auto& e : p.products) {
    std::size_t x = e.x, y = e.y, xy = e.xy;
    std::string at = "(" + p.arrow_names[x] + ", " + p.arrow_names[y] + ")";
    auto iyix = p.product(p.inv[y], p.inv[x]);
    if (!iyix || *iyix != p.inv[xy]) out.push_back("i(xy) != i(y)i(x) at " + at);
    auto w = p.product(p.k(x), p.j[y]);
    auto rhs = w ? p.product(p.k(*w), p.k(y)) : std::nullopt;
    if (!rhs || *rhs != p.k(xy)) out.push_back("k(xy) != k(k(x)j(y))k(y) at " + at);
    auto ixxy = p.product(p.inv[x], xy);
    if (!ixxy || *ixxy != y) out.push_back("i(x)(xy) != y at " + at);
  }
  // (yx) i(x) = y: for every entry (y, x) -> yx
  for (const auto& e : p.products) {
    auto r = p.product(e.xy, p.inv[e.y]);
    if (!r || *r != e.x)
      out.push_back("(yx)i(x) != y at (" + p.arrow_names[e.x] + ", " +
                    p.arrow_names[e.y] + ")");
  }
  return out;
}

}  // namespace dgw
