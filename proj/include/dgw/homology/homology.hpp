#pragma once

// Homology of the quotient complex C = B/A, where B_n is free on V_n and A_n
// is spanned by the elements x + s_i x.  With torsion allowed in C_n, the
// homology is computed as a subquotient of Z^{V_n}:
//
//   Z'_n = { v : ∂v ∈ A_{n-1} },   B'_n = ∂(B_{n+1}) + A_n,   H_n = Z'_n / B'_n.
//
// The structural checks below are exact and exhaustive on the enumerated
// degrees.

#include <cstddef>
#include <string>
#include <vector>

#include "dgw/homology/tuple_complex.hpp"
#include "dgw/perm.hpp"
#include "dgw/zlin.hpp"

namespace dgw {

struct HomologyResult {
  long min_degree = -1;
  std::vector<InvariantFactors> groups;  // groups[n - min_degree]
  long max_degree = -1;                  // last degree computed
  bool truncated = false;
  std::vector<std::size_t> sizes;        // |V_n| for n = min_degree .. max_degree

  /// H_n; zero beyond the computed range unless the result is truncated.
  InvariantFactors at(long n) const {
    if (n < min_degree || n > max_degree) {
      if (truncated && n > max_degree)
        throw ComputationError("degree " + std::to_string(n) +
                               " lies beyond the truncated range");
      return {};
    }
    return groups[static_cast<std::size_t>(n - min_degree)];
  }

  std::string to_string() const {
    std::string s;
    for (long n = min_degree; n <= max_degree; ++n)
      s += "H_" + std::to_string(n) + " = " + at(n).to_string() + "\n";
    if (truncated) s += "(truncated at degree " + std::to_string(max_degree) + ")\n";
    return s;
  }
};

inline HomologyResult homology(const TupleComplex& tc) {
  HomologyResult r;
  r.truncated = tc.truncated();
  const long top = std::min<long>(tc.top_degree(), static_cast<long>(tc.max_dim()));
  r.max_degree = top;
  IntMatrix a_below(0, 0);  // A_{n-1}
  for (long n = -1; n <= top; ++n) {
    const std::size_t dim = tc.size(n);
    r.sizes.push_back(dim);
    IntMatrix z = n == -1 ? IntMatrix::identity(dim)
                          : preimage_lattice(tc.boundary(n), a_below);
    IntMatrix a_here = n >= 1 ? tc.a_relations(n) : IntMatrix(dim, 0);
    IntMatrix b = tc.boundary(n + 1).hcat(a_here);
    r.groups.push_back(quotient_invariants(z, b));
    a_below = std::move(a_here);
  }
  return r;
}

inline HomologyResult homology(const DeltaTable& t,
                               std::size_t max_dim = TupleComplex::default_max_dim) {
  TupleComplex::Options opts;
  opts.max_dim = max_dim;
  return homology(TupleComplex(t, opts));
}

/// A failed structural check: what was checked and a witness.
struct ComplexViolation {
  std::string check;
  std::string witness;
};

/// ∂_{n-1} ∂_n = 0 for every enumerated degree.
inline std::vector<ComplexViolation> check_boundary_squared(const TupleComplex& tc) {
  std::vector<ComplexViolation> out;
  for (long n = 0; n <= tc.top_degree(); ++n) {
    IntMatrix dd = tc.boundary(n) * tc.boundary(n + 1);
    if (!dd.is_zero())
      out.push_back({"boundary squared", "degree " + std::to_string(n + 1)});
  }
  return out;
}

/// Every face of every enumerated tuple, ∂_0 included, lies one degree
/// lower.
inline std::vector<ComplexViolation> check_faces(const TupleComplex& tc) {
  std::vector<ComplexViolation> out;
  for (long n = 0; n <= tc.top_degree(); ++n)
    for (std::size_t e = 0; e < tc.size(n); ++e)
      for (std::size_t q = 0; q <= static_cast<std::size_t>(n); ++q) {
        try {
          (void)tc.face_index(n, e, q);
        } catch (const StructuralError& err) {
          out.push_back({"faces", err.what()});
        }
      }
  return out;
}

/// s_i^2 = 1, s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1} and s_i s_j = s_j s_i
/// (|i - j| >= 2) on every V_n.
inline std::vector<ComplexViolation> check_symmetric_relations(const TupleComplex& tc) {
  std::vector<ComplexViolation> out;
  for (long n = 1; n <= tc.top_degree(); ++n) {
    const std::size_t dim = tc.size(n);
    std::vector<std::vector<std::size_t>> s(static_cast<std::size_t>(n) + 1);
    try {
      for (std::size_t i = 1; i <= static_cast<std::size_t>(n); ++i) s[i] = tc.action(n, i);
    } catch (const StructuralError& err) {
      out.push_back({"action closure", err.what()});
      continue;
    }
    const std::string deg = " in degree " + std::to_string(n);
    for (std::size_t i = 1; i <= static_cast<std::size_t>(n); ++i)
      for (std::size_t e = 0; e < dim; ++e) {
        if (s[i][s[i][e]] != e)
          out.push_back({"involution", "s_" + std::to_string(i) + deg + " at " +
                                           tc.describe(n, e)});
        for (std::size_t k = i + 1; k <= static_cast<std::size_t>(n); ++k) {
          bool ok = k == i + 1 ? s[i][s[k][s[i][e]]] == s[k][s[i][s[k][e]]]
                               : s[i][s[k][e]] == s[k][s[i][e]];
          if (!ok)
            out.push_back({k == i + 1 ? "braid" : "commutation",
                           "s_" + std::to_string(i) + ", s_" + std::to_string(k) + deg +
                               " at " + tc.describe(n, e)});
        }
      }
  }
  return out;
}

/// ∂_q (s_j t) = δ_q(s_j) ∂_{s_j(q)} t for every generator, face index and
/// tuple.
inline std::vector<ComplexViolation> check_intertwining(const TupleComplex& tc) {
  std::vector<ComplexViolation> out;
  for (long n = 1; n <= tc.top_degree(); ++n) {
    const auto nn = static_cast<std::size_t>(n);
    for (std::size_t j = 1; j <= nn; ++j) {
      const Perm g = Perm::transposition(j);
      const auto act = tc.action(n, j);
      for (std::size_t q = 0; q <= nn; ++q) {
        const Perm d = delta(q, g);
        for (std::size_t e = 0; e < tc.size(n); ++e) {
          std::size_t lhs = tc.face_index(n, act[e], q);
          std::size_t rhs = tc.apply(n - 1, d, tc.face_index(n, e, g(q)));
          if (lhs != rhs)
            out.push_back({"intertwining", "s_" + std::to_string(j) + ", face " +
                                               std::to_string(q) + " at " +
                                               tc.describe(n, e)});
        }
      }
    }
  }
  return out;
}

/// ∂(A_n) ⊆ A_{n-1}, so that the differential descends to C = B/A.
inline std::vector<ComplexViolation> check_subcomplex(const TupleComplex& tc) {
  std::vector<ComplexViolation> out;
  for (long n = 2; n <= tc.top_degree(); ++n) {
    IntMatrix image = tc.boundary(n) * tc.a_relations(n);
    IntMatrix basis = hnf(tc.a_relations(n - 1));
    for (std::size_t c = 0; c < image.cols(); ++c)
      if (!detail::hnf_coordinates(basis, image.column(c))) {
        out.push_back({"subcomplex", "degree " + std::to_string(n) + ", relation " +
                                         std::to_string(c)});
        break;
      }
  }
  // degree 1: A_0 = 0, so ∂ must kill A_1
  if (tc.top_degree() >= 1 && !(tc.boundary(1) * tc.a_relations(1)).is_zero())
    out.push_back({"subcomplex", "degree 1"});
  return out;
}

/// All structural checks combined.
inline std::vector<ComplexViolation> check_complex(const TupleComplex& tc) {
  std::vector<ComplexViolation> out;
  for (auto* f : {check_faces, check_boundary_squared, check_symmetric_relations,
                  check_intertwining, check_subcomplex}) {
    auto v = f(tc);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

}  // namespace dgw
