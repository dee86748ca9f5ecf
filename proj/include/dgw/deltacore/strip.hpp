#pragma once

// The rational strip: the groupoid on Q x (Q ∩ [0,1)) in which (x,s) is a
// morphism from frac(x) to s, (x,s)(s+m,t) = (x+m,t), with H the set of
// non-identity morphisms and
//
//     k(x,t) = ((t* x - t^) / (x - t), t*).
//
// The groupoid is infinite; it is only ever explored on finite samples.

#include <gmpxx.h>

#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dgw/deltacore/axioms.hpp"
#include "dgw/error.hpp"

namespace dgw::strip {

using Rational = mpq_class;

struct Element {
  Rational x;  // any rational; frac(x) is the domain
  Rational t;  // codomain, in [0,1)

  friend bool operator==(const Element& a, const Element& b) {
    return a.x == b.x && a.t == b.t;
  }
  std::string to_string() const {
    return "(" + x.get_str() + "," + t.get_str() + ")";
  }
};

inline Rational floor(const Rational& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(f);
}

inline Rational frac(const Rational& q) { return q - floor(q); }

inline void require_unit_interval(const Rational& t) {
  if (t < 0 || t >= 1)
    throw ValidationError("strip coordinate " + t.get_str() + " not in [0,1)");
}

/// t* : 0* = 0 and (p/q)* = p'/q with p p' = -1 (mod q), 0 < p' < q.
inline Rational star(const Rational& t) {
  require_unit_interval(t);
  if (t == 0) return 0;
  mpz_class p = t.get_num(), q = t.get_den();
  mpz_class pbar;
  mpz_class negp = q - p;  // -p mod q
  if (mpz_invert(pbar.get_mpz_t(), negp.get_mpz_t(), q.get_mpz_t()) == 0)
    throw StructuralError("no inverse modulo denominator");
  // p * pbar' = -1 mod q  <=>  pbar' = (-p)^{-1} mod q
  return Rational(pbar, q);
}

/// t^ : 0^ = 1 and (p/q)^ = (p p' + 1)/q^2.
inline Rational hat(const Rational& t) {
  require_unit_interval(t);
  if (t == 0) return 1;
  mpz_class p = t.get_num(), q = t.get_den();
  mpz_class pbar = star(t).get_num();  // star(t) = pbar/q in lowest terms
  Rational r(p * pbar + 1, q * q);
  r.canonicalize();
  return r;
}

inline Rational dom(const Element& e) { return frac(e.x); }
inline const Rational& cod(const Element& e) { return e.t; }
inline bool is_identity(const Element& e) { return e.x == e.t; }

/// (x,s)(s+m,t) = (x+m,t), defined when frac(y) = s.
inline std::optional<Element> compose(const Element& a, const Element& b) {
  if (frac(b.x) != a.t) return std::nullopt;
  return Element{a.x + (b.x - a.t), b.t};
}

/// (s+k,t)^{-1} = (t-k, s).
inline Element inverse(const Element& e) {
  Rational s = frac(e.x);
  Rational k = e.x - s;
  return Element{e.t - k, s};
}

/// k on a non-identity morphism.  Throws ValidationError on identities.
inline Element k(const Element& e) {
  if (is_identity(e))
    throw ValidationError("k is undefined on the identity " + e.to_string());
  Rational ts = star(e.t);
  Rational v = (ts * e.x - hat(e.t)) / (e.x - e.t);
  v.canonicalize();
  return Element{v, ts};
}

/// j = i k i.
inline Element j(const Element& e) { return inverse(k(inverse(e))); }

/// All of [0,1) ∩ Q with denominator at most max_den.
inline std::vector<Rational> unit_interval_sample(unsigned max_den) {
  std::vector<Rational> out{Rational(0)};
  for (unsigned q = 2; q <= max_den; ++q)
    for (unsigned p = 1; p < q; ++p)
      if (std::gcd(p, q) == 1) out.emplace_back(p, q);
  return out;
}

/// Checks axioms (i)-(iv) on every composable pair of non-identity morphisms
/// (x, s), (y, t) with s, t, frac(x), frac(y) of denominator <= max_den and
/// integer parts of x and y in [min_shift, max_shift].
inline AxiomReport check_samples(unsigned max_den, int min_shift = -1,
                                 int max_shift = 1) {
  AxiomReport report;
  auto pts = unit_interval_sample(max_den);
  auto name = [](const Element& e) { return e.to_string(); };
  for (const auto& s : pts) {
    // star is an involution and hat(t*) = hat(t)
    if (star(star(s)) != s) report.add("ii", "star is not an involution at " + s.get_str());
    if (hat(star(s)) != hat(s)) report.add("ii", "hat(t*) != hat(t) at " + s.get_str());
  }
  for (const auto& f : pts) {
    for (int m1 = min_shift; m1 <= max_shift; ++m1) {
      for (const auto& s : pts) {
        Element a{f + m1, s};
        if (is_identity(a)) continue;
        Element ia = inverse(a);
        if (is_identity(ia) || !(inverse(ia) == a))
          report.add("i", "inverse misbehaves at " + name(a));
        Element ka = k(a);
        if (!(k(ka) == a)) report.add("ii", "k is not an involution at " + name(a));
        Element ja = j(a);
        if (is_identity(ja) || !(j(ja) == a))
          report.add("ii", "j is not an involution at " + name(a));
        // iji = jij, i.e. k computed both ways
        if (!(inverse(j(inverse(a))) == j(inverse(j(a)))))
          report.add("ii", "iji != jij at " + name(a));
        for (int m2 = min_shift; m2 <= max_shift; ++m2) {
          for (const auto& t : pts) {
            Element b{s + m2, t};
            if (is_identity(b)) continue;
            ++report.pairs_checked;
            auto ab = compose(a, b);
            Element jb = j(b);
            auto kajb = compose(ka, jb);
            if (!kajb) {
              report.add("iii", "(k(x), j(y)) not composable for (" + name(a) +
                                    ", " + name(b) + ")");
              continue;
            }
            if (is_identity(*ab)) continue;  // composable, not H-composable
            if (is_identity(*kajb)) {
              report.add("iv", "k(x)j(y) is an identity for (" + name(a) +
                                   ", " + name(b) + ")");
              continue;
            }
            auto lhs = compose(k(*ab), inverse(k(b)));
            if (!lhs || !(*lhs == k(*kajb)))
              report.add("iv", "k(xy)ik(y) != k(k(x)j(y)) for (" + name(a) +
                                   ", " + name(b) + ")");
          }
        }
      }
    }
  }
  return report;
}

}  // namespace dgw::strip
