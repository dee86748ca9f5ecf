#pragma once

// Exact linear algebra over the integers.
//
// All arithmetic uses GMP integers.  Lattices are represented by matrices
// whose columns span them.  The main entry points are
//
//   hnf                  column-style Hermite normal form (a canonical basis)
//   snf                  Smith normal form with unimodular transforms
//   kernel               integer basis of the kernel
//   preimage_lattice     {v : m v in colspan(sub)}
//   quotient_invariants  invariant factors of colspan(ambient)/colspan(sub)
//   solve                one integer solution of m z = rhs, if any

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dgw/error.hpp"

namespace dgw {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) {
        throw ValidationError("ragged matrix literal");
      }
      for (long v : r) {
        data_.emplace_back(v);
      }
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = 1;
    }
    return m;
  }

  /// A rows x cols.size() matrix with the given columns.
  static IntMatrix from_columns(std::size_t rows,
                                const std::vector<IntVector>& cols) {
    IntMatrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c].size() != rows) {
        throw ValidationError("column length does not match row count");
      }
      for (std::size_t r = 0; r < rows; ++r) {
        m(r, c) = cols[c][r];
      }
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  IntVector column(std::size_t c) const {
    IntVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      v[r] = (*this)(r, c);
    }
    return v;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) {
        t(c, r) = (*this)(r, c);
      }
    }
    return t;
  }

  /// [this | other]; both must have the same number of rows.
  IntMatrix hcat(const IntMatrix& other) const {
    if (other.rows_ != rows_ && other.cols_ != 0 && cols_ != 0) {
      throw ValidationError("hcat: row counts differ");
    }
    std::size_t rows = cols_ == 0 ? other.rows_ : rows_;
    IntMatrix m(rows, cols_ + other.cols_);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) {
        m(r, c) = (*this)(r, c);
      }
      for (std::size_t c = 0; c < other.cols_; ++c) {
        m(r, cols_ + c) = other(r, c);
      }
    }
    return m;
  }

  /// Columns [first, last).
  IntMatrix columns(std::size_t first, std::size_t last) const {
    IntMatrix m(rows_, last - first);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = first; c < last; ++c) {
        m(r, c - first) = (*this)(r, c);
      }
    }
    return m;
  }

  /// Rows [first, last).
  IntMatrix row_range(std::size_t first, std::size_t last) const {
    IntMatrix m(last - first, cols_);
    for (std::size_t r = first; r < last; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) {
        m(r - first, c) = (*this)(r, c);
      }
    }
    return m;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](const Integer& v) { return v == 0; });
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) {
      throw ValidationError("matrix product: dimension mismatch");
    }
    IntMatrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Integer& x = a(i, k);
        if (x == 0) {
          continue;
        }
        for (std::size_t j = 0; j < b.cols_; ++j) {
          m(i, j) += x * b(k, j);
        }
      }
    }
    return m;
  }

  friend IntVector operator*(const IntMatrix& a, const IntVector& v) {
    if (a.cols_ != v.size()) {
      throw ValidationError("matrix-vector product: dimension mismatch");
    }
    IntVector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (v[k] != 0) {
          out[i] += a(i, k) * v[k];
        }
      }
    }
    return out;
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
      os << (r ? ", [" : "[");
      for (std::size_t c = 0; c < cols_; ++c) {
        os << (c ? ", " : "") << (*this)(r, c).get_str();
      }
      os << ']';
    }
    os << ']';
    return os.str();
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// A finitely generated abelian group Z^free_rank + Z/d_1 + ... + Z/d_k with
/// d_1 | d_2 | ... | d_k and every d_i >= 2.
struct InvariantFactors {
  std::vector<Integer> torsion;
  std::size_t free_rank = 0;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }

  friend bool operator==(const InvariantFactors&,
                         const InvariantFactors&) = default;

  /// "0", "Z", "Z^2", "Z/5", "Z + Z/2 + Z/6".
  std::string to_string() const {
    if (is_trivial()) {
      return "0";
    }
    std::string out;
    if (free_rank > 0) {
      out = free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
    }
    for (const Integer& d : torsion) {
      if (!out.empty()) {
        out += " + ";
      }
      out += "Z/" + d.get_str();
    }
    return out;
  }
};

namespace detail {

// Quotient of a by b rounded to the nearest integer, so that the remainder
// a - q b lies in (-|b|/2, |b|/2].  Keeps entries small during elimination.
inline Integer nearest_quotient(const Integer& a, const Integer& b) {
  Integer q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  // r has the sign of b; move to the symmetric range
  Integer twice = 2 * r;
  if (b > 0 ? twice > b : twice < b) {
    q += 1;
  }
  return q;
}

// Row-style Hermite normal form in place.  After the call `a` is in row
// echelon form with positive pivots and entries above each pivot reduced into
// [0, pivot).  If `u` is non-null it is left-multiplied by the same row
// operations (so u_out * a_in = a_out when u_in is the identity).  Returns the
// rank.
inline std::size_t row_hnf_in_place(IntMatrix& a, IntMatrix* u) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  auto swap_rows = [&](IntMatrix& m, std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      std::swap(m(i, c), m(j, c));
    }
  };
  auto addmul_row = [&](IntMatrix& m, std::size_t dst, std::size_t src,
                        const Integer& q) {  // row dst -= q * row src
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(src, c) != 0) {
        m(dst, c) -= q * m(src, c);
      }
    }
  };
  std::size_t pr = 0;
  for (std::size_t c = 0; c < cols && pr < rows; ++c) {
    for (;;) {
      // pick the row with smallest non-zero |entry| in column c
      std::size_t best = rows;
      for (std::size_t r = pr; r < rows; ++r) {
        if (a(r, c) != 0 &&
            (best == rows || abs(a(r, c)) < abs(a(best, c)))) {
          best = r;
        }
      }
      if (best == rows) {
        break;
      }
      if (best != pr) {
        swap_rows(a, best, pr);
        if (u) {
          swap_rows(*u, best, pr);
        }
      }
      bool clean = true;
      for (std::size_t r = pr + 1; r < rows; ++r) {
        if (a(r, c) == 0) {
          continue;
        }
        Integer q = nearest_quotient(a(r, c), a(pr, c));
        addmul_row(a, r, pr, q);
        if (u) {
          addmul_row(*u, r, pr, q);
        }
        if (a(r, c) != 0) {
          clean = false;
        }
      }
      if (clean) {
        break;
      }
    }
    if (pr >= rows || a(pr, c) == 0) {
      continue;
    }
    if (a(pr, c) < 0) {
      for (std::size_t k = 0; k < cols; ++k) {
        a(pr, k) = -a(pr, k);
      }
      if (u) {
        for (std::size_t k = 0; k < u->cols(); ++k) {
          (*u)(pr, k) = -(*u)(pr, k);
        }
      }
    }
    for (std::size_t r = 0; r < pr; ++r) {
      if (a(r, c) == 0) {
        continue;
      }
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), a(r, c).get_mpz_t(), a(pr, c).get_mpz_t());
      addmul_row(a, r, pr, q);
      if (u) {
        addmul_row(*u, r, pr, q);
      }
    }
    ++pr;
  }
  return pr;
}

}  // namespace detail

/// Column-style Hermite normal form: a matrix whose columns form the canonical
/// basis of colspan(m).  Zero columns are dropped, so the result has
/// rank(m) columns.  Equal column spans give identical results.
inline IntMatrix hnf(const IntMatrix& m) {
  IntMatrix t = m.transpose();
  std::size_t rank = detail::row_hnf_in_place(t, nullptr);
  IntMatrix out(m.rows(), rank);
  for (std::size_t c = 0; c < rank; ++c) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      out(r, c) = t(c, r);
    }
  }
  return out;
}

/// U * m * V = diag(diagonal) with U, V unimodular; u_inv = U^{-1}.
struct SmithForm {
  IntMatrix u;
  IntMatrix u_inv;
  IntMatrix v;
  /// min(rows, cols) entries, d_0 | d_1 | ..., non-negative; zeros trail.
  std::vector<Integer> diagonal;
  std::size_t rank = 0;
};

/// Smith normal form.  When `with_transforms` is false, u, u_inv and v are
/// left empty (which is noticeably faster on large inputs).
inline SmithForm snf(const IntMatrix& m, bool with_transforms = true) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IntMatrix a = m;
  SmithForm res;
  if (with_transforms) {
    res.u = IntMatrix::identity(rows);
    res.u_inv = IntMatrix::identity(rows);
    res.v = IntMatrix::identity(cols);
  }
  const bool tr = with_transforms;

  // Elementary operations, mirrored on the transforms.
  auto row_swap = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols; ++c) std::swap(a(i, c), a(j, c));
    if (tr) {
      for (std::size_t c = 0; c < rows; ++c) std::swap(res.u(i, c), res.u(j, c));
      for (std::size_t r = 0; r < rows; ++r)
        std::swap(res.u_inv(r, i), res.u_inv(r, j));
    }
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows; ++r) std::swap(a(r, i), a(r, j));
    if (tr) {
      for (std::size_t r = 0; r < cols; ++r) std::swap(res.v(r, i), res.v(r, j));
    }
  };
  // row dst -= q * row src
  auto row_addmul = [&](std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t c = 0; c < cols; ++c)
      if (a(src, c) != 0) a(dst, c) -= q * a(src, c);
    if (tr) {
      for (std::size_t c = 0; c < rows; ++c)
        if (res.u(src, c) != 0) res.u(dst, c) -= q * res.u(src, c);
      // inverse operation on the right of U^{-1}: column src += q * column dst
      for (std::size_t r = 0; r < rows; ++r)
        if (res.u_inv(r, dst) != 0) res.u_inv(r, src) += q * res.u_inv(r, dst);
    }
  };
  // column dst -= q * column src
  auto col_addmul = [&](std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t r = 0; r < rows; ++r)
      if (a(r, src) != 0) a(r, dst) -= q * a(r, src);
    if (tr) {
      for (std::size_t r = 0; r < cols; ++r)
        if (res.v(r, src) != 0) res.v(r, dst) -= q * res.v(r, src);
    }
  };
  auto row_negate = [&](std::size_t i) {
    for (std::size_t c = 0; c < cols; ++c) a(i, c) = -a(i, c);
    if (tr) {
      for (std::size_t c = 0; c < rows; ++c) res.u(i, c) = -res.u(i, c);
      for (std::size_t r = 0; r < rows; ++r) res.u_inv(r, i) = -res.u_inv(r, i);
    }
  };

  const std::size_t n = std::min(rows, cols);
  std::size_t t = 0;
  for (; t < n; ++t) {
    // smallest non-zero entry of the remaining block
    std::size_t br = rows, bc = cols;
    for (std::size_t r = t; r < rows; ++r) {
      for (std::size_t c = t; c < cols; ++c) {
        if (a(r, c) != 0 &&
            (br == rows || abs(a(r, c)) < abs(a(br, bc)))) {
          br = r;
          bc = c;
          if (abs(a(r, c)) == 1) break;
        }
      }
      if (br != rows && abs(a(br, bc)) == 1) break;
    }
    if (br == rows) {
      break;
    }
    row_swap(t, br);
    col_swap(t, bc);
    for (;;) {
      bool done = true;
      // reduce column t below the pivot and row t right of it
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (a(r, t) == 0) continue;
        row_addmul(r, t, detail::nearest_quotient(a(r, t), a(t, t)));
        if (a(r, t) != 0) done = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (a(t, c) == 0) continue;
        col_addmul(c, t, detail::nearest_quotient(a(t, c), a(t, t)));
        if (a(t, c) != 0) done = false;
      }
      if (!done) {
        // some remainder is smaller than the pivot: move the smallest one in
        // row t or column t into the pivot position and repeat
        std::size_t pr = t, pc = t;
        for (std::size_t r = t + 1; r < rows; ++r)
          if (a(r, t) != 0 && (pr == t || abs(a(r, t)) < abs(a(pr, t)))) pr = r;
        for (std::size_t c = t + 1; c < cols; ++c)
          if (a(t, c) != 0 && (pc == t || abs(a(t, c)) < abs(a(t, pc)))) pc = c;
        if (pc != t && (pr == t || abs(a(t, pc)) < abs(a(pr, t)))) {
          col_swap(t, pc);
        } else {
          row_swap(t, pr);
        }
        continue;
      }
      // divisibility: the pivot must divide the remaining block
      std::size_t bad = rows;
      for (std::size_t r = t + 1; r < rows && bad == rows; ++r) {
        for (std::size_t c = t + 1; c < cols; ++c) {
          if (a(r, c) != 0 && !mpz_divisible_p(a(r, c).get_mpz_t(),
                                                a(t, t).get_mpz_t())) {
            bad = r;
            break;
          }
        }
      }
      if (bad == rows) break;
      row_addmul(t, bad, Integer(-1));  // row t += row bad
    }
    if (a(t, t) < 0) {
      row_negate(t);
    }
  }
  res.rank = t;
  res.diagonal.assign(n, Integer(0));
  for (std::size_t i = 0; i < t; ++i) {
    res.diagonal[i] = a(i, i);
  }
  return res;
}

/// Determinant by fraction-free (Bareiss) elimination.
inline Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) {
    throw ValidationError("determinant of a non-square matrix");
  }
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

inline bool is_unimodular(const IntMatrix& m) {
  if (m.rows() != m.cols()) return false;
  Integer d = determinant(m);
  return d == 1 || d == -1;
}

/// Integer basis (as columns, in Hermite normal form) of {v : m v = 0}.
inline IntMatrix kernel(const IntMatrix& m) {
  SmithForm s = snf(m);
  IntMatrix basis = s.v.columns(s.rank, m.cols());
  return hnf(basis);
}

/// One integer solution z of m z = rhs, or nothing if none exists.
inline std::optional<IntVector> solve(const IntMatrix& m, const IntVector& rhs) {
  if (rhs.size() != m.rows()) {
    throw ValidationError("solve: right-hand side has wrong length");
  }
  SmithForm s = snf(m);
  IntVector w = s.u * rhs;
  IntVector y(m.cols());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i < s.rank) {
      if (!mpz_divisible_p(w[i].get_mpz_t(), s.diagonal[i].get_mpz_t())) {
        return std::nullopt;
      }
      mpz_divexact(y[i].get_mpz_t(), w[i].get_mpz_t(),
                   s.diagonal[i].get_mpz_t());
    } else if (w[i] != 0) {
      return std::nullopt;
    }
  }
  return s.v * y;
}

/// Basis (HNF columns) of the lattice {v in Z^cols(m) : m v in colspan(sub)}.
inline IntMatrix preimage_lattice(const IntMatrix& m, const IntMatrix& sub) {
  if (sub.cols() > 0 && sub.rows() != m.rows()) {
    throw ValidationError("preimage_lattice: row counts differ");
  }
  IntMatrix neg = sub;
  for (std::size_t r = 0; r < neg.rows(); ++r)
    for (std::size_t c = 0; c < neg.cols(); ++c) neg(r, c) = -neg(r, c);
  IntMatrix joint = sub.cols() == 0 ? m : m.hcat(neg);
  if (joint.rows() == 0) {
    return IntMatrix::identity(m.cols());
  }
  IntMatrix k = kernel(joint);
  return hnf(k.row_range(0, m.cols()));
}

namespace detail {

// Coordinates of v with respect to a column-HNF basis b (full column rank,
// pivots in increasing rows).  Returns nothing if v is not in the span.
inline std::optional<IntVector> hnf_coordinates(const IntMatrix& b,
                                                const IntVector& v) {
  IntVector coords(b.cols());
  IntVector rest = v;
  std::size_t row = 0;
  for (std::size_t c = 0; c < b.cols(); ++c) {
    while (row < b.rows() && b(row, c) == 0) {
      if (rest[row] != 0) return std::nullopt;
      ++row;
    }
    if (row == b.rows()) return std::nullopt;
    if (!mpz_divisible_p(rest[row].get_mpz_t(), b(row, c).get_mpz_t())) {
      return std::nullopt;
    }
    mpz_divexact(coords[c].get_mpz_t(), rest[row].get_mpz_t(),
                 b(row, c).get_mpz_t());
    for (std::size_t r = row; r < b.rows(); ++r) {
      if (b(r, c) != 0) rest[r] -= coords[c] * b(r, c);
    }
    ++row;
  }
  for (std::size_t r = 0; r < rest.size(); ++r) {
    if (rest[r] != 0) return std::nullopt;
  }
  return coords;
}

inline InvariantFactors factors_from_diagonal(const std::vector<Integer>& diag,
                                              std::size_t rank,
                                              std::size_t ambient_rank) {
  InvariantFactors f;
  for (std::size_t i = 0; i < rank; ++i) {
    if (diag[i] != 1) f.torsion.push_back(diag[i]);
  }
  f.free_rank = ambient_rank - rank;
  return f;
}

}  // namespace detail

/// Whether v lies in colspan(m).
inline bool in_span(const IntMatrix& m, const IntVector& v) {
  return detail::hnf_coordinates(hnf(m), v).has_value();
}

/// Invariant factors of colspan(ambient) / colspan(sub).  Throws
/// ValidationError naming the first column of `sub` outside colspan(ambient).
inline InvariantFactors quotient_invariants(const IntMatrix& ambient,
                                            const IntMatrix& sub) {
  IntMatrix basis = hnf(ambient);
  const std::size_t r = basis.cols();
  IntMatrix coords(r, sub.cols());
  for (std::size_t c = 0; c < sub.cols(); ++c) {
    auto x = detail::hnf_coordinates(basis, sub.column(c));
    if (!x) {
      throw ValidationError("quotient_invariants: generator " +
                            std::to_string(c) +
                            " of the sublattice is not in the ambient lattice");
    }
    for (std::size_t i = 0; i < r; ++i) coords(i, c) = (*x)[i];
  }
  if (sub.cols() == 0 || r == 0) {
    InvariantFactors f;
    f.free_rank = r;
    return f;
  }
  SmithForm s = snf(coords, false);
  return detail::factors_from_diagonal(s.diagonal, s.rank, r);
}

/// Invariant factors of Z^rows / colspan(m), i.e. the cokernel of m.
inline InvariantFactors cokernel_invariants(const IntMatrix& m) {
  if (m.cols() == 0) {
    InvariantFactors f;
    f.free_rank = m.rows();
    return f;
  }
  SmithForm s = snf(m, false);
  return detail::factors_from_diagonal(s.diagonal, s.rank, m.rows());
}

}  // namespace dgw
