#pragma once

// The Hurwitz integral quaternions: a + bi + cj + dk with all coordinates in
// Z or all in 1/2 + Z, where i^2 = j^2 = -1 and k = ij = -ji.  The Z-basis
// is w = (1+i+j+k)/2, i, j, k.  The structure constants are computed by
// quaternion multiplication on doubled coordinates; integrality of every
// product in the basis is the closure certificate of the half-integer
// lattice.

#include <array>
#include <cstddef>
#include <vector>

#include "dgw/error.hpp"
#include "dgw/ringfun/algebra.hpp"

namespace dgw {

namespace detail {

// Doubled coordinates (2a, 2b, 2c, 2d) of a + bi + cj + dk.
using Quat2 = std::array<Integer, 4>;

inline Quat2 quat2_mul(const Quat2& x, const Quat2& y) {
  // (2q)(2q') = 4 qq'; halve to get the doubled product
  Quat2 r{x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3],
          x[0] * y[1] + x[1] * y[0] + x[2] * y[3] - x[3] * y[2],
          x[0] * y[2] - x[1] * y[3] + x[2] * y[0] + x[3] * y[1],
          x[0] * y[3] + x[1] * y[2] - x[2] * y[1] + x[3] * y[0]};
  for (auto& v : r) {
    if (!mpz_divisible_ui_p(v.get_mpz_t(), 2))
      throw ComputationError("quaternion product left the half-integer lattice");
    v /= 2;
  }
  return r;
}

// Doubled coordinates -> Hurwitz basis (w, i, j, k):
// a + bi + cj + dk = 2a w + (b-a) i + (c-a) j + (d-a) k.
inline IntVector quat2_to_hurwitz(const Quat2& q) {
  IntVector v{q[0], q[1] - q[0], q[2] - q[0], q[3] - q[0]};
  for (std::size_t t = 1; t < 4; ++t) {
    if (!mpz_divisible_ui_p(v[t].get_mpz_t(), 2))
      throw ComputationError("quaternion is not a Hurwitz integer");
    v[t] /= 2;
  }
  return v;
}

inline Quat2 hurwitz_to_quat2(const IntVector& v) {
  return {v[0], v[0] + 2 * v[1], v[0] + 2 * v[2], v[0] + 2 * v[3]};
}

}  // namespace detail

inline FiniteRankAlgebra hurwitz() {
  const std::array<detail::Quat2, 4> basis{detail::Quat2{1, 1, 1, 1},
                                           detail::Quat2{0, 2, 0, 0},
                                           detail::Quat2{0, 0, 2, 0},
                                           detail::Quat2{0, 0, 0, 2}};
  std::vector<IntVector> table;
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b)
      table.push_back(detail::quat2_to_hurwitz(detail::quat2_mul(basis[a], basis[b])));
  IntVector unit = detail::quat2_to_hurwitz({2, 0, 0, 0});
  return FiniteRankAlgebra({"w", "i", "j", "k"}, {0, 0, 0, 0}, std::move(table),
                           std::move(unit));
}

/// Ordinary coordinates (a, b, c, d) of a Hurwitz element, as halves:
/// returns (2a, 2b, 2c, 2d).
inline std::array<Integer, 4> hurwitz_doubled_coordinates(const IntVector& v) {
  return detail::hurwitz_to_quat2(v);
}

}  // namespace dgw
