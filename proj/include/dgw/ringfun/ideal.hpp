#pragma once

// Two-sided ideals and quotient algebras.
//
// The ideal generated by a set of elements is the smallest lattice that
// contains them and the torsion relations and is closed under left and right
// multiplication by basis elements.  It is computed by saturation: the HNF
// basis is multiplied by every basis element on both sides and re-reduced
// until it no longer changes.  The quotient is read off a Smith normal form;
// when the quotient is free, or cyclic, a basis of images of original basis
// elements is preferred so that names stay readable.

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dgw/error.hpp"
#include "dgw/ringfun/algebra.hpp"
#include "dgw/zlin.hpp"

namespace dgw {

/// Columns spanning the two-sided ideal generated by `gens` (HNF basis),
/// including the torsion relations of the algebra.
inline IntMatrix ideal_lattice(const FiniteRankAlgebra& alg, const std::vector<IntVector>& gens,
                               std::size_t* iterations = nullptr,
                               std::size_t max_iterations = 1000) {
  const std::size_t n = alg.rank();
  if (n == 0) {
    if (iterations) *iterations = 0;
    return IntMatrix(0, 0);
  }
  std::vector<IntVector> cols;
  for (const auto& g : gens) {
    if (g.size() != n) throw ValidationError("ideal generator has wrong length");
    cols.push_back(g);
  }
  for (std::size_t i = 0; i < n; ++i)
    if (alg.moduli()[i] != 0) {
      IntVector t(n);
      t[i] = alg.moduli()[i];
      cols.push_back(std::move(t));
    }
  auto to_matrix = [&](const std::vector<IntVector>& vs) {
    IntMatrix m(n, vs.size());
    for (std::size_t c = 0; c < vs.size(); ++c)
      for (std::size_t r = 0; r < n; ++r) m(r, c) = vs[c][r];
    return m;
  };
  IntMatrix basis = hnf(to_matrix(cols));
  for (std::size_t it = 1;; ++it) {
    if (it > max_iterations)
      throw ComputationError("ideal closure did not stabilise within " +
                             std::to_string(max_iterations) + " iterations");
    std::vector<IntVector> next;
    for (std::size_t c = 0; c < basis.cols(); ++c) {
      IntVector v = basis.column(c);
      next.push_back(v);
      for (std::size_t k = 0; k < n; ++k) {
        IntVector e = alg.basis_vector(k);
        next.push_back(alg.mul(e, v));
        next.push_back(alg.mul(v, e));
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      if (alg.moduli()[i] != 0) {
        IntVector t(n);
        t[i] = alg.moduli()[i];
        next.push_back(std::move(t));
      }
    IntMatrix grown = hnf(to_matrix(next));
    if (grown == basis) {
      if (iterations) *iterations = it;
      return basis;
    }
    basis = std::move(grown);
  }
}

/// A quotient algebra together with the projection from the original one.
struct QuotientAlgebra {
  FiniteRankAlgebra algebra;
  IntMatrix projection;          // quotient coordinates = projection * original
  std::vector<IntVector> lifts;  // representatives of the quotient basis
  std::size_t iterations = 0;    // saturation rounds of the ideal closure

  IntVector project(const IntVector& v) const {
    return algebra.reduce(projection * v);
  }
};

namespace detail {

inline IntMatrix unimodular_inverse(const IntMatrix& m) {
  SmithForm s = snf(m);
  // U m V = I, so m^-1 = V U
  return s.v * s.u;
}

}  // namespace detail

/// A / I where I is the two-sided ideal generated by `gens`.
inline QuotientAlgebra quotient_algebra(const FiniteRankAlgebra& alg,
                                        const std::vector<IntVector>& gens) {
  const std::size_t n = alg.rank();
  QuotientAlgebra q;
  IntMatrix ideal = ideal_lattice(alg, gens, &q.iterations);

  // Smith form of the ideal lattice: y = U x are adapted coordinates
  IntMatrix u = IntMatrix::identity(n), u_inv = IntMatrix::identity(n);
  std::vector<Integer> d(n, 0);
  if (ideal.cols() > 0) {
    SmithForm s = snf(ideal);
    u = s.u;
    u_inv = s.u_inv;
    for (std::size_t i = 0; i < s.rank; ++i) d[i] = s.diagonal[i];
  }
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < n; ++i)
    if (d[i] != 1) kept.push_back(i);
  const std::size_t m = kept.size();
  std::vector<Integer> moduli;
  IntMatrix proj(m, n);
  std::vector<IntVector> lifts;
  for (std::size_t a = 0; a < m; ++a) {
    moduli.push_back(d[kept[a]]);
    for (std::size_t c = 0; c < n; ++c) proj(a, c) = u(kept[a], c);
    lifts.push_back(u_inv.column(kept[a]));
  }
  auto reduce_proj = [&](IntMatrix& p) {
    for (std::size_t a = 0; a < m; ++a)
      if (moduli[a] != 0)
        for (std::size_t c = 0; c < n; ++c)
          mpz_fdiv_r(p(a, c).get_mpz_t(), p(a, c).get_mpz_t(), moduli[a].get_mpz_t());
  };
  std::vector<std::string> names;
  bool named = false;

  // prefer images of original basis elements as the quotient basis
  const bool all_free = std::all_of(moduli.begin(), moduli.end(), [](const Integer& x) { return x == 0; });
  if (m > 0 && all_free && m <= n) {
    std::vector<std::size_t> pick(m);
    for (std::size_t a = 0; a < m; ++a) pick[a] = a;
    for (;;) {
      IntMatrix sq(m, m);
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) sq(a, b) = proj(a, pick[b]);
      if (is_unimodular(sq)) {
        proj = detail::unimodular_inverse(sq) * proj;
        lifts.clear();
        for (std::size_t b = 0; b < m; ++b) {
          lifts.push_back(alg.basis_vector(pick[b]));
          names.push_back(alg.name(pick[b]));
        }
        named = true;
        break;
      }
      // next m-subset in lexicographic order
      std::size_t a = m;
      while (a > 0 && pick[a - 1] == n - m + a - 1) --a;
      if (a == 0) break;
      ++pick[a - 1];
      for (std::size_t b = a; b < m; ++b) pick[b] = pick[b - 1] + 1;
    }
  } else if (m == 1 && moduli[0] != 0) {
    for (std::size_t c = 0; c < n && !named; ++c) {
      Integer coef = proj(0, c), g, inv;
      mpz_gcdext(g.get_mpz_t(), inv.get_mpz_t(), nullptr, coef.get_mpz_t(),
                 moduli[0].get_mpz_t());
      if (g != 1) continue;
      for (std::size_t k = 0; k < n; ++k) proj(0, k) *= inv;
      lifts = {alg.basis_vector(c)};
      names = {alg.name(c)};
      named = true;
    }
  }
  reduce_proj(proj);
  if (!named) {
    for (std::size_t a = 0; a < m; ++a) names.push_back("[" + alg.format(lifts[a]) + "]");
  }

  FiniteRankAlgebra shell(names, moduli, std::vector<IntVector>(m * m, IntVector(m)),
                          IntVector(m));
  auto project = [&](const IntVector& v) { return shell.reduce(proj * v); };
  std::vector<IntVector> table;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) table.push_back(project(alg.mul(lifts[a], lifts[b])));
  q.algebra = FiniteRankAlgebra(std::move(names), std::move(moduli), std::move(table),
                                project(alg.unit_vector()));
  q.projection = std::move(proj);
  q.lifts = std::move(lifts);
  return q;
}

inline QuotientAlgebra quotient_algebra(const FiniteRankAlgebra& alg,
                                        const std::vector<AlgebraElement>& gens) {
  std::vector<IntVector> v;
  for (const auto& g : gens) {
    if (&g.algebra() != &alg) throw ValidationError("ideal generator from another algebra");
    v.push_back(g.coords());
  }
  return quotient_algebra(alg, v);
}

}  // namespace dgw
