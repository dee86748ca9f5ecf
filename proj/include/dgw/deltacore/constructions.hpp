#pragma once

// Canonical finite Δ-groupoids:
//
//   pair_delta(G)    the tree groupoid G x G, H = G^2, j(f,g) = (f^-1, f^-1 g)
//   triple_delta(n)  X^3 over X = {0..n-1}, (a,b,c): (a,b) -> (a,c),
//                    j(a,b,c) = (b,a,c)
//   ring_A(R)        one-object groupoid on the subgroup of R* generated by
//                    H = (1 - R*) ∩ R*, k(x) = 1 - x
//   ring_B(R)        one-object groupoid on the subgroup of R ⋊ R* generated
//                    by H = R* x R*, product (x,y)(u,v) = (x + yu, yv),
//                    k(x,y) = (y,x)
//
// In every case j is obtained from k through j = i k i.

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dgw/deltacore/finite_groupoid.hpp"
#include "dgw/deltacore/finite_structures.hpp"

namespace dgw {

inline FiniteDeltaGroupoid empty_groupoid() {
  return FiniteDeltaGroupoid(FiniteDeltaGroupoid::Data{});
}

inline FiniteDeltaGroupoid pair_delta(const GroupTable& g) {
  const std::size_t n = g.order();
  FiniteDeltaGroupoid::Data d;
  d.num_objects = n;
  d.object_names = g.names();
  auto idx = [n](std::size_t f, std::size_t h) { return f * n + h; };
  for (std::size_t f = 0; f < n; ++f)
    for (std::size_t h = 0; h < n; ++h) {
      d.names.push_back("(" + g.name(f) + "," + g.name(h) + ")");
      d.dom.push_back(f);
      d.cod.push_back(h);
    }
  const std::size_t m = n * n;
  d.compose.assign(m * m, FiniteDeltaGroupoid::none);
  for (std::size_t f = 0; f < n; ++f)
    for (std::size_t h = 0; h < n; ++h)
      for (std::size_t l = 0; l < n; ++l)
        d.compose[idx(f, h) * m + idx(h, l)] = idx(f, l);
  for (std::size_t f = 0; f < n; ++f)
    for (std::size_t h = 0; h < n; ++h) {
      std::size_t fi = g.inverse(f);
      d.h.push_back(idx(f, h));
      d.j.push_back(idx(fi, g.mul(fi, h)));
    }
  return FiniteDeltaGroupoid(std::move(d));
}

inline FiniteDeltaGroupoid triple_delta(std::size_t x_size) {
  const std::size_t n = x_size;
  FiniteDeltaGroupoid::Data d;
  d.num_objects = n * n;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      d.object_names.push_back("(" + std::to_string(a) + "," +
                               std::to_string(b) + ")");
  auto idx = [n](std::size_t a, std::size_t b, std::size_t c) {
    return (a * n + b) * n + c;
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        d.names.push_back("(" + std::to_string(a) + "," + std::to_string(b) +
                          "," + std::to_string(c) + ")");
        d.dom.push_back(a * n + b);
        d.cod.push_back(a * n + c);
      }
  const std::size_t m = n * n * n;
  d.compose.assign(m * m, FiniteDeltaGroupoid::none);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t e = 0; e < n; ++e)
          d.compose[idx(a, b, c) * m + idx(a, c, e)] = idx(a, b, e);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        d.h.push_back(idx(a, b, c));
        d.j.push_back(idx(b, a, c));
      }
  return FiniteDeltaGroupoid(std::move(d));
}

namespace detail {

// One-object groupoid on the subgroup generated by `gens` inside a finite
// group given by `mul` on elements of type T; `k` is the involution on H.
template <class T, class Mul, class K, class Name>
FiniteDeltaGroupoid delta_group(const T& unit, const std::vector<T>& gens,
                                Mul mul, K k, Name name) {
  if (gens.empty()) return empty_groupoid();
  std::vector<T> elems{unit};
  std::map<T, std::size_t> index{{unit, 0}};
  for (std::size_t front = 0; front < elems.size(); ++front) {
    for (const T& g : gens) {
      T p = mul(elems[front], g);
      if (index.emplace(p, elems.size()).second) elems.push_back(p);
    }
  }
  const std::size_t n = elems.size();
  FiniteDeltaGroupoid::Data d;
  d.num_objects = 1;
  d.object_names = {"*"};
  d.dom.assign(n, 0);
  d.cod.assign(n, 0);
  d.compose.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    d.names.push_back(name(elems[a]));
    for (std::size_t b = 0; b < n; ++b)
      d.compose[a * n + b] = index.at(mul(elems[a], elems[b]));
  }
  std::vector<std::size_t> inv(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (d.compose[a * n + b] == 0) inv[a] = b;
  for (const T& h : gens) {
    std::size_t x = index.at(h);
    // j = i k i
    auto kx = index.find(k(elems[inv[x]]));
    if (kx == index.end())
      throw StructuralError("k leaves the generated group at " + name(h));
    d.h.push_back(x);
    d.j.push_back(inv[kx->second]);
  }
  return FiniteDeltaGroupoid(std::move(d));
}

}  // namespace detail

inline FiniteDeltaGroupoid ring_A(const FiniteRing& r) {
  std::vector<std::size_t> h;
  for (std::size_t x : r.units())
    if (r.is_unit(r.sub(r.one(), x))) h.push_back(x);
  return detail::delta_group<std::size_t>(
      r.one(), h, [&](std::size_t a, std::size_t b) { return r.mul(a, b); },
      [&](std::size_t a) { return r.sub(r.one(), a); },
      [&](std::size_t a) { return r.name(a); });
}

inline FiniteDeltaGroupoid ring_B(const FiniteRing& r) {
  // The zero ring has R ⋊ R* trivial and nothing sensible for H.
  if (r.size() == 1) return empty_groupoid();
  using P = std::pair<std::size_t, std::size_t>;
  std::vector<P> h;
  auto units = r.units();
  for (std::size_t x : units)
    for (std::size_t y : units) h.emplace_back(x, y);
  return detail::delta_group<P>(
      P{r.zero(), r.one()}, h,
      [&](const P& a, const P& b) {
        return P{r.add(a.first, r.mul(a.second, b.first)),
                 r.mul(a.second, b.second)};
      },
      [](const P& a) { return P{a.second, a.first}; },
      [&](const P& a) {
        return "(" + r.name(a.first) + "," + r.name(a.second) + ")";
      });
}

}  // namespace dgw
