#pragma once

// Unital rings that are finitely generated as abelian groups.
//
// A FiniteRankAlgebra has basis e_0, ..., e_{n-1} with additive orders
// given by `moduli` (0 = infinite order, m > 1 = Z/m), structure constants
// e_i e_j = sum_k c_ijk e_k and a unit vector.  Elements are integer vectors
// reduced modulo the moduli.  Two-sided ideals are computed by lattice
// saturation under multiplication by basis elements, with Hermite normal
// forms at every step, so the arithmetic is exact over Z.

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "dgw/error.hpp"
#include "dgw/zlin.hpp"

namespace dgw {

class FiniteRankAlgebra;

/// An element together with the algebra it lives in; supports + - * ==.
class AlgebraElement {
 public:
  AlgebraElement(const FiniteRankAlgebra& alg, IntVector c);

  const FiniteRankAlgebra& algebra() const noexcept { return *alg_; }
  const IntVector& coords() const noexcept { return c_; }
  bool is_zero() const;
  std::string to_string() const;

  friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator-(const AlgebraElement& a);
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(const Integer& n, const AlgebraElement& a);
  friend AlgebraElement operator+(const AlgebraElement& a, long n);
  friend AlgebraElement operator+(long n, const AlgebraElement& a);
  friend AlgebraElement operator-(const AlgebraElement& a, long n);
  friend AlgebraElement operator-(long n, const AlgebraElement& a);
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

 private:
  const FiniteRankAlgebra* alg_;
  IntVector c_;
};

/// A violated identity: which check failed and where.
struct AlgebraViolation {
  std::string check;
  std::string witness;
};

class FiniteRankAlgebra {
 public:
  FiniteRankAlgebra() = default;

  /// `table[i * rank + j]` holds the coordinates of e_i e_j.  Coordinates
  /// are reduced on construction; sizes and moduli are validated, but the
  /// ring axioms are certified separately (see certificate()).
  FiniteRankAlgebra(std::vector<std::string> names, std::vector<Integer> moduli,
                    std::vector<IntVector> table, IntVector unit)
      : names_(std::move(names)), moduli_(std::move(moduli)),
        table_(std::move(table)), unit_(std::move(unit)) {
    const std::size_t n = names_.size();
    if (moduli_.size() != n || table_.size() != n * n || unit_.size() != n)
      throw ValidationError("algebra data has inconsistent sizes");
    for (const Integer& m : moduli_)
      if (m < 0 || m == 1)
        throw ValidationError("additive orders must be 0 (free) or at least 2");
    for (auto& v : table_) {
      if (v.size() != n) throw ValidationError("structure constant has wrong length");
      reduce_in_place(v);
    }
    reduce_in_place(unit_);
  }

  /// The ring Z (rank 1, basis "1").
  static FiniteRankAlgebra integers() {
    return FiniteRankAlgebra({"1"}, {0}, {{1}}, {1});
  }

  /// The zero ring (rank 0).
  static FiniteRankAlgebra zero_ring() { return FiniteRankAlgebra({}, {}, {}, {}); }

  /// Z[t]/(f) for a monic f = t^d + c_{d-1} t^{d-1} + ... + c_0, given as
  /// {c_0, ..., c_{d-1}}.  Basis 1, t, ..., t^{d-1}.
  static FiniteRankAlgebra monic_quotient(const std::vector<long>& lower_coeffs,
                                          const std::string& var = "t") {
    const std::size_t d = lower_coeffs.size();
    if (d == 0) return zero_ring();
    std::vector<std::string> names;
    for (std::size_t k = 0; k < d; ++k)
      names.push_back(k == 0 ? "1" : k == 1 ? var : var + "^" + std::to_string(k));
    // powers t^0 .. t^{2d-2} reduced
    std::vector<IntVector> pw(2 * d - 1, IntVector(d));
    for (std::size_t k = 0; k < d; ++k) pw[k][k] = 1;
    for (std::size_t k = d; k < pw.size(); ++k) {
      // t^k = t * t^{k-1}
      IntVector prev = pw[k - 1], next(d);
      for (std::size_t i = 0; i + 1 < d; ++i) next[i + 1] = prev[i];
      const Integer top = prev[d - 1];
      for (std::size_t i = 0; i < d; ++i) next[i] -= top * lower_coeffs[i];
      pw[k] = std::move(next);
    }
    std::vector<IntVector> table(d * d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) table[i * d + j] = pw[i + j];
    IntVector unit(d);
    unit[0] = 1;
    return FiniteRankAlgebra(std::move(names), std::vector<Integer>(d, 0), std::move(table),
                             std::move(unit));
  }

  std::size_t rank() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<Integer>& moduli() const noexcept { return moduli_; }
  const IntVector& structure_constant(std::size_t i, std::size_t j) const {
    return table_[i * rank() + j];
  }
  const IntVector& unit_vector() const noexcept { return unit_; }
  bool is_torsion_free() const {
    for (const Integer& m : moduli_)
      if (m != 0) return false;
    return true;
  }

  /// The additive group as invariant factors.
  InvariantFactors additive_group() const {
    IntMatrix rel(rank(), 0);
    for (std::size_t i = 0; i < rank(); ++i) {
      if (moduli_[i] == 0) continue;
      IntMatrix col(rank(), 1);
      col(i, 0) = moduli_[i];
      rel = rel.cols() == 0 ? col : rel.hcat(col);
    }
    return cokernel_invariants(rel);
  }

  // ---- raw vector arithmetic ----

  void reduce_in_place(IntVector& v) const {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (moduli_[i] != 0) {
        mpz_fdiv_r(v[i].get_mpz_t(), v[i].get_mpz_t(), moduli_[i].get_mpz_t());
      }
  }
  IntVector reduce(IntVector v) const {
    reduce_in_place(v);
    return v;
  }
  IntVector zero_vector() const { return IntVector(rank()); }
  IntVector basis_vector(std::size_t i) const {
    IntVector v(rank());
    v.at(i) = 1;
    return reduce(std::move(v));
  }
  IntVector add(const IntVector& a, const IntVector& b) const {
    IntVector v(rank());
    for (std::size_t i = 0; i < rank(); ++i) v[i] = a[i] + b[i];
    return reduce(std::move(v));
  }
  IntVector sub(const IntVector& a, const IntVector& b) const {
    IntVector v(rank());
    for (std::size_t i = 0; i < rank(); ++i) v[i] = a[i] - b[i];
    return reduce(std::move(v));
  }
  IntVector scale(const Integer& s, const IntVector& a) const {
    IntVector v(rank());
    for (std::size_t i = 0; i < rank(); ++i) v[i] = s * a[i];
    return reduce(std::move(v));
  }
  IntVector mul(const IntVector& a, const IntVector& b) const {
    const std::size_t n = rank();
    IntVector v(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (b[j] == 0) continue;
        Integer s = a[i] * b[j];
        const IntVector& c = table_[i * n + j];
        for (std::size_t k = 0; k < n; ++k)
          if (c[k] != 0) v[k] += s * c[k];
      }
    }
    return reduce(std::move(v));
  }
  bool equal(const IntVector& a, const IntVector& b) const { return reduce(a) == reduce(b); }
  bool is_zero(const IntVector& a) const {
    for (const Integer& x : reduce(a))
      if (x != 0) return false;
    return true;
  }
  IntVector from_integer(const Integer& n) const { return scale(n, unit_); }

  /// Matrix of y -> a y (columns = images of the basis).
  IntMatrix left_matrix(const IntVector& a) const {
    IntMatrix m(rank(), rank());
    for (std::size_t j = 0; j < rank(); ++j) {
      IntVector c = mul(a, basis_vector(j));
      for (std::size_t i = 0; i < rank(); ++i) m(i, j) = c[i];
    }
    return m;
  }
  /// Matrix of y -> y a.
  IntMatrix right_matrix(const IntVector& a) const {
    IntMatrix m(rank(), rank());
    for (std::size_t j = 0; j < rank(); ++j) {
      IntVector c = mul(basis_vector(j), a);
      for (std::size_t i = 0; i < rank(); ++i) m(i, j) = c[i];
    }
    return m;
  }

  /// Two-sided inverse of a, if a is a unit.  Decided by solving a y = 1 and
  /// y a = 1 modulo the torsion relations.
  std::optional<IntVector> inverse(const IntVector& a) const {
    if (rank() == 0) return IntVector{};
    auto solve_side = [&](const IntMatrix& m) -> std::optional<IntVector> {
      IntMatrix sys = m.hcat(torsion_matrix());
      auto z = solve(sys, unit_);
      if (!z) return std::nullopt;
      return reduce(IntVector(z->begin(), z->begin() + static_cast<std::ptrdiff_t>(rank())));
    };
    auto right = solve_side(left_matrix(a));   // a y = 1
    if (!right) return std::nullopt;
    auto left = solve_side(right_matrix(a));   // y a = 1
    if (!left) return std::nullopt;
    // in an associative ring a left and a right inverse coincide
    if (!equal(*left, *right)) return std::nullopt;
    return right;
  }
  bool is_unit(const IntVector& a) const { return inverse(a).has_value(); }

  /// Whether a is invertible after tensoring with Q (torsion-free algebras
  /// only): the left multiplication matrix is nonsingular.
  bool is_unit_over_q(const IntVector& a) const {
    require_torsion_free("invertibility over Q");
    return determinant(left_matrix(a)) != 0;
  }

  bool commutes_with_basis(const IntVector& a) const {
    for (std::size_t i = 0; i < rank(); ++i)
      if (!equal(mul(a, basis_vector(i)), mul(basis_vector(i), a))) return false;
    return true;
  }
  bool is_commutative() const {
    for (std::size_t i = 0; i < rank(); ++i)
      if (!commutes_with_basis(basis_vector(i))) return false;
    return true;
  }

  // ---- certificate ----

  /// Associativity on all basis triples, the unit law on all basis elements
  /// and compatibility of products with the additive orders.
  std::vector<AlgebraViolation> certificate() const {
    std::vector<AlgebraViolation> out;
    const std::size_t n = rank();
    for (std::size_t i = 0; i < n; ++i) {
      IntVector e = basis_vector(i);
      if (!equal(mul(unit_, e), e) || !equal(mul(e, unit_), e))
        out.push_back({"unit law", names_[i]});
      if (moduli_[i] != 0)
        for (std::size_t j = 0; j < n; ++j) {
          IntVector f = basis_vector(j);
          if (!is_zero(scale(moduli_[i], mul(e, f))) || !is_zero(scale(moduli_[i], mul(f, e))))
            out.push_back({"torsion", names_[i] + " with " + names_[j]});
        }
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const IntVector& ij = table_[i * n + j];
        for (std::size_t k = 0; k < n; ++k) {
          if (!equal(mul(ij, basis_vector(k)), mul(basis_vector(i), table_[j * n + k])))
            out.push_back({"associativity",
                           "(" + names_[i] + ", " + names_[j] + ", " + names_[k] + ")"});
        }
      }
    return out;
  }

  // ---- elements, parsing and printing ----

  AlgebraElement element(const IntVector& v) const { return AlgebraElement(*this, reduce(v)); }
  AlgebraElement basis_element(std::size_t i) const { return element(basis_vector(i)); }
  AlgebraElement one() const { return element(unit_); }
  AlgebraElement constant(const Integer& n) const { return element(from_integer(n)); }

  /// Parses an expression such as "2+2p+r+2x+3r^2+rx" or "(1-i-j+k)/2".
  /// Terms are products of integers, basis names and parenthesised
  /// expressions, with ^ for powers and / for exact division by an
  /// integer.  A letter run that is not a basis name is read as a product
  /// of one-letter basis names.
  AlgebraElement parse(const std::string& text) const {
    Parser p{*this, text, 0};
    IntVector v = p.expr();
    p.skip();
    if (p.pos != text.size())
      throw ValidationError("unexpected '" + text.substr(p.pos) + "' in '" + text + "'");
    return element(v);
  }

  /// Human-readable form, e.g. "2 + r - 3*rx".
  std::string format(const IntVector& a) const {
    IntVector v = reduce(a);
    std::string out;
    for (std::size_t i = 0; i < rank(); ++i) {
      if (v[i] == 0) continue;
      Integer c = v[i];
      bool neg = c < 0;
      if (neg) c = -c;
      if (out.empty())
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      const bool is_one = names_[i] == "1";
      if (is_one)
        out += c.get_str();
      else if (c == 1)
        out += names_[i];
      else
        out += c.get_str() + "*" + names_[i];
    }
    return out.empty() ? "0" : out;
  }

 private:
  void require_torsion_free(const std::string& what) const {
    if (!is_torsion_free())
      throw ComputationError(what + " needs a torsion-free algebra");
  }

  IntMatrix torsion_matrix() const {
    IntMatrix m(rank(), 0);
    for (std::size_t i = 0; i < rank(); ++i) {
      if (moduli_[i] == 0) continue;
      IntMatrix col(rank(), 1);
      col(i, 0) = moduli_[i];
      m = m.cols() == 0 ? col : m.hcat(col);
    }
    return m;
  }

  std::optional<std::size_t> find_name(const std::string& s) const {
    for (std::size_t i = 0; i < rank(); ++i)
      if (names_[i] == s) return i;
    return std::nullopt;
  }

  struct Parser {
    const FiniteRankAlgebra& alg;
    const std::string& s;
    std::size_t pos;

    void skip() {
      while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
      skip();
      if (pos < s.size() && s[pos] == c) {
        ++pos;
        return true;
      }
      return false;
    }
    [[noreturn]] void fail(const std::string& why) const {
      throw ValidationError(why + " at position " + std::to_string(pos) + " in '" + s + "'");
    }
    Integer integer() {
      skip();
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (start == pos) fail("expected an integer");
      return Integer(s.substr(start, pos - start));
    }
    IntVector expr() {
      skip();
      IntVector v = alg.zero_vector();
      bool neg = false;
      if (eat('-')) neg = true;
      else eat('+');
      IntVector t = term();
      v = neg ? alg.sub(v, t) : alg.add(v, t);
      for (;;) {
        if (eat('+')) v = alg.add(v, term());
        else if (eat('-')) v = alg.sub(v, term());
        else return v;
      }
    }
    bool at_factor_start() {
      skip();
      if (pos >= s.size()) return false;
      char c = s[pos];
      return c == '(' || std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }
    IntVector term() {
      IntVector v = power();
      for (;;) {
        if (eat('*')) v = alg.mul(v, power());
        else if (eat('/')) {
          Integer d = integer();
          if (d == 0) fail("division by zero");
          for (auto& x : v) {
            if (!mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t())) fail("inexact division");
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
          }
          v = alg.reduce(v);
        } else if (at_factor_start()) v = alg.mul(v, power());
        else return v;
      }
    }
    IntVector power() {
      IntVector base = atom();
      if (eat('^')) {
        Integer e = integer();
        IntVector r = alg.unit_;
        for (Integer k = 0; k < e; ++k) r = alg.mul(r, base);
        return r;
      }
      return base;
    }
    IntVector atom() {
      skip();
      if (pos >= s.size()) fail("unexpected end");
      char c = s[pos];
      if (c == '(') {
        ++pos;
        IntVector v = expr();
        if (!eat(')')) fail("missing ')'");
        return v;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) return alg.from_integer(integer());
      std::size_t start = pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        ++pos;
      std::string word = s.substr(start, pos - start);
      if (auto i = alg.find_name(word)) return alg.basis_vector(*i);
      // a run of one-letter names
      IntVector v = alg.unit_;
      for (char ch : word) {
        auto i = alg.find_name(std::string(1, ch));
        if (!i) {
          pos = start;
          fail("unknown name '" + word + "'");
        }
        v = alg.mul(v, alg.basis_vector(*i));
      }
      return v;
    }
  };

  std::vector<std::string> names_;
  std::vector<Integer> moduli_;
  std::vector<IntVector> table_;
  IntVector unit_;
};

// ---- AlgebraElement ----

inline AlgebraElement::AlgebraElement(const FiniteRankAlgebra& alg, IntVector c)
    : alg_(&alg), c_(std::move(c)) {}
inline bool AlgebraElement::is_zero() const { return alg_->is_zero(c_); }
inline std::string AlgebraElement::to_string() const { return alg_->format(c_); }

namespace detail {
inline void same_algebra(const AlgebraElement& a, const AlgebraElement& b) {
  if (&a.algebra() != &b.algebra())
    throw ValidationError("elements of different algebras combined");
}
}  // namespace detail

inline AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  detail::same_algebra(a, b);
  return AlgebraElement(*a.alg_, a.alg_->add(a.c_, b.c_));
}
inline AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
  detail::same_algebra(a, b);
  return AlgebraElement(*a.alg_, a.alg_->sub(a.c_, b.c_));
}
inline AlgebraElement operator-(const AlgebraElement& a) {
  return AlgebraElement(*a.alg_, a.alg_->scale(-1, a.c_));
}
inline AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  detail::same_algebra(a, b);
  return AlgebraElement(*a.alg_, a.alg_->mul(a.c_, b.c_));
}
inline AlgebraElement operator*(const Integer& n, const AlgebraElement& a) {
  return AlgebraElement(*a.alg_, a.alg_->scale(n, a.c_));
}
inline AlgebraElement operator+(const AlgebraElement& a, long n) {
  return a + a.alg_->constant(n);
}
inline AlgebraElement operator+(long n, const AlgebraElement& a) { return a + n; }
inline AlgebraElement operator-(const AlgebraElement& a, long n) {
  return a - a.alg_->constant(n);
}
inline AlgebraElement operator-(long n, const AlgebraElement& a) {
  return a.alg_->constant(n) - a;
}
inline bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  return &a.algebra() == &b.algebra() && a.alg_->equal(a.c_, b.c_);
}

/// Checks that the Z-linear map sending basis element e_i of `from` to
/// images[i] in `to` is a unital ring homomorphism.
inline std::vector<AlgebraViolation> check_homomorphism(const FiniteRankAlgebra& from,
                                                        const FiniteRankAlgebra& to,
                                                        const std::vector<IntVector>& images) {
  if (images.size() != from.rank())
    throw ValidationError("one image per basis element is required");
  auto apply = [&](const IntVector& v) {
    IntVector out = to.zero_vector();
    for (std::size_t i = 0; i < from.rank(); ++i)
      if (v[i] != 0) out = to.add(out, to.scale(v[i], images[i]));
    return out;
  };
  std::vector<AlgebraViolation> out;
  if (!to.equal(apply(from.unit_vector()), to.unit_vector()))
    out.push_back({"unit", "image of 1 is " + to.format(apply(from.unit_vector()))});
  for (std::size_t i = 0; i < from.rank(); ++i) {
    if (from.moduli()[i] != 0 && !to.is_zero(to.scale(from.moduli()[i], images[i])))
      out.push_back({"additive order", from.name(i)});
    for (std::size_t j = 0; j < from.rank(); ++j) {
      IntVector lhs = apply(from.structure_constant(i, j));
      IntVector rhs = to.mul(images[i], images[j]);
      if (!to.equal(lhs, rhs))
        out.push_back({"product", from.name(i) + "*" + from.name(j) + ": " + to.format(lhs) +
                                      " != " + to.format(rhs)});
    }
  }
  return out;
}

/// Whether the homomorphism given by basis images is bijective (both
/// algebras torsion-free: the image matrix is unimodular).
inline bool is_bijective_map(const FiniteRankAlgebra& from, const FiniteRankAlgebra& to,
                             const std::vector<IntVector>& images) {
  if (!from.is_torsion_free() || !to.is_torsion_free())
    throw ComputationError("bijectivity test needs torsion-free algebras");
  if (from.rank() != to.rank()) return false;
  IntMatrix m(to.rank(), from.rank());
  for (std::size_t j = 0; j < from.rank(); ++j)
    for (std::size_t i = 0; i < to.rank(); ++i) m(i, j) = images[j][i];
  return is_unimodular(m);
}

}  // namespace dgw
