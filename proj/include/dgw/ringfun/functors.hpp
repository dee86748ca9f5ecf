#pragma once

// Finite-rank computation of A'G and B'G for finite Δ-groupoids.
//
// Both are quotients of the groupoid ring Z[G] (basis: morphisms; products of
// non-composable morphisms vanish; unit: the sum of the identities) by a
// two-sided ideal computed by lattice closure:
//
//   A'G:  u_x + u_{k(x)} - u_{1_{dom x}}, x in H;
//   B'G:  every v_g is first rewritten into Z[G] along a fixed breadth-first
//         factorization g = h g' (h in H), v(g) = u_h v(g') + v(h) with
//         v(h) = u_{k(h)} and v(1) = 0; the ideal is generated by all
//         well-definedness differences u_x v(y) + v(x) - v(xy) over composable
//         pairs together with v(x) - u_{k(x)} and v(k(x)) - u_x on H, so the
//         result does not depend on the factorization chosen.
//
// The empty groupoid gives Z (the initial unital ring).

#include <cstddef>
#include <deque>
#include <vector>

#include "dgw/deltacore/finite_groupoid.hpp"
#include "dgw/error.hpp"
#include "dgw/ringfun/algebra.hpp"
#include "dgw/ringfun/ideal.hpp"

namespace dgw {

/// Z[G] as a finite-rank algebra.
inline FiniteRankAlgebra groupoid_algebra(const FiniteDeltaGroupoid& g) {
  const std::size_t n = g.num_morphisms();
  std::vector<std::string> names;
  for (std::size_t x = 0; x < n; ++x) names.push_back(g.name(x));
  std::vector<IntVector> table;
  table.reserve(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      IntVector v(n);
      std::size_t xy = g.compose(x, y);
      if (xy != FiniteDeltaGroupoid::none) v[xy] = 1;
      table.push_back(std::move(v));
    }
  IntVector unit(n);
  for (std::size_t a = 0; a < g.num_objects(); ++a) unit[g.identity(a)] = 1;
  return FiniteRankAlgebra(std::move(names), std::vector<Integer>(n, 0), std::move(table),
                           std::move(unit));
}

/// Generators of the A' ideal in Z[G].
inline std::vector<IntVector> aprime_ideal_generators(const FiniteDeltaGroupoid& g) {
  const std::size_t n = g.num_morphisms();
  std::vector<IntVector> gens;
  for (std::size_t x : g.h()) {
    IntVector v(n);
    v[x] += 1;
    v[g.k(x)] += 1;
    v[g.identity(g.dom(x))] -= 1;
    gens.push_back(std::move(v));
  }
  return gens;
}

/// The breadth-first rewriting of v_g into Z[G].  Throws StructuralError if
/// H does not generate G.
inline std::vector<IntVector> bprime_v_images(const FiniteDeltaGroupoid& g,
                                              const FiniteRankAlgebra& zg) {
  const std::size_t n = g.num_morphisms();
  std::vector<IntVector> v(n);
  std::vector<bool> known(n, false);
  std::deque<std::size_t> queue;
  for (std::size_t a = 0; a < g.num_objects(); ++a) {
    std::size_t e = g.identity(a);
    v[e] = zg.zero_vector();
    known[e] = true;
    queue.push_back(e);
  }
  for (std::size_t h : g.h()) {
    if (known[h]) continue;
    v[h] = zg.basis_vector(g.k(h));
    known[h] = true;
    queue.push_back(h);
  }
  while (!queue.empty()) {
    std::size_t y = queue.front();
    queue.pop_front();
    for (std::size_t h : g.h()) {
      std::size_t hy = g.compose(h, y);
      if (hy == FiniteDeltaGroupoid::none || known[hy]) continue;
      v[hy] = zg.add(zg.mul(zg.basis_vector(h), v[y]), v[h]);
      known[hy] = true;
      queue.push_back(hy);
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    if (!known[x]) throw StructuralError("H does not generate: " + g.name(x) + " is not reached");
  return v;
}

/// Generators of the B' ideal in Z[G] (after v-elimination).
inline std::vector<IntVector> bprime_ideal_generators(const FiniteDeltaGroupoid& g,
                                                      const FiniteRankAlgebra& zg) {
  const auto v = bprime_v_images(g, zg);
  const std::size_t n = g.num_morphisms();
  std::vector<IntVector> gens;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t xy = g.compose(x, y);
      if (xy == FiniteDeltaGroupoid::none) continue;
      IntVector d = zg.sub(zg.add(zg.mul(zg.basis_vector(x), v[y]), v[x]), v[xy]);
      if (!zg.is_zero(d)) gens.push_back(std::move(d));
    }
  for (std::size_t x : g.h()) {
    IntVector a = zg.sub(v[x], zg.basis_vector(g.k(x)));
    IntVector b = zg.sub(v[g.k(x)], zg.basis_vector(x));
    if (!zg.is_zero(a)) gens.push_back(std::move(a));
    if (!zg.is_zero(b)) gens.push_back(std::move(b));
  }
  return gens;
}

/// A'G with the projection from Z[G] (g must be non-empty).
inline QuotientAlgebra aprime_quotient(const FiniteDeltaGroupoid& g) {
  if (g.empty()) throw ValidationError("the empty groupoid has no groupoid ring basis");
  return quotient_algebra(groupoid_algebra(g), aprime_ideal_generators(g));
}

inline QuotientAlgebra bprime_quotient(const FiniteDeltaGroupoid& g) {
  if (g.empty()) throw ValidationError("the empty groupoid has no groupoid ring basis");
  FiniteRankAlgebra zg = groupoid_algebra(g);
  auto gens = bprime_ideal_generators(g, zg);
  return quotient_algebra(zg, gens);
}

inline FiniteRankAlgebra aprime_finite(const FiniteDeltaGroupoid& g) {
  if (g.empty()) return FiniteRankAlgebra::integers();
  return aprime_quotient(g).algebra;
}

inline FiniteRankAlgebra bprime_finite(const FiniteDeltaGroupoid& g) {
  if (g.empty()) return FiniteRankAlgebra::integers();
  return bprime_quotient(g).algebra;
}

}  // namespace dgw
