#pragma once

// Ring presentations: generators, relators (noncommutative integer
// polynomials asserted to vanish) and invertible-generator markers.
//
// Emitters build the presentations of the rings A'G and B'G of a Δ-groupoid
// (finite or presented) and the two knot-group rings used by the
// representation checks.  eval_hom evaluates a presentation at concrete
// elements of a finite-rank algebra.

#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dgw/deltacore/finite_groupoid.hpp"
#include "dgw/deltacore/presentation.hpp"
#include "dgw/error.hpp"
#include "dgw/report.hpp"
#include "dgw/ringfun/algebra.hpp"
#include "dgw/ringfun/polynomial.hpp"

namespace dgw {

struct RingPresentation {
  std::vector<std::string> generators;  // identifier-safe names
  std::vector<std::string> labels;      // display names (parallel to generators)
  std::vector<NCPolynomial> relators;   // each asserted = 0
  /// (g, g') with g g' = g' g = 1 among the relators; g == g' allowed
  /// (an involution).
  std::vector<std::pair<std::size_t, std::size_t>> inverses;
  std::vector<std::string> comments;

  std::size_t add_generator(const std::string& name, const std::string& label = {}) {
    if (find_generator(name)) throw ValidationError("duplicate generator " + name);
    generators.push_back(name);
    labels.push_back(label.empty() ? name : label);
    return generators.size() - 1;
  }

  std::optional<std::size_t> find_generator(const std::string& name) const {
    for (std::size_t g = 0; g < generators.size(); ++g)
      if (generators[g] == name) return g;
    return std::nullopt;
  }

  NCPolynomial gen(std::size_t g) const { return NCPolynomial::generator(g); }
  NCPolynomial gen(const std::string& name) const {
    auto g = find_generator(name);
    if (!g) throw ValidationError("unknown generator " + name);
    return NCPolynomial::generator(*g);
  }

  /// Adds a relator unless it is zero or already present.
  void add_relator(const NCPolynomial& p) {
    if (p.is_zero()) return;
    for (const auto& r : relators)
      if (r == p) return;
    relators.push_back(p);
  }
  void add_relation(const NCPolynomial& lhs, const NCPolynomial& rhs) { add_relator(lhs - rhs); }

  /// Marks g' as the two-sided inverse of g and adds the unit relations.
  void mark_inverse(std::size_t g, std::size_t g_inv) {
    for (const auto& [a, b] : inverses)
      if ((a == g && b == g_inv) || (a == g_inv && b == g)) return;
    inverses.emplace_back(g, g_inv);
    const auto one = NCPolynomial::constant(1);
    add_relation(gen(g) * gen(g_inv), one);
    add_relation(gen(g_inv) * gen(g), one);
  }

  /// Adds a generator `name` together with a formal inverse `name_inv`.
  std::size_t add_invertible(const std::string& name, const std::string& label = {}) {
    std::size_t g = add_generator(name, label);
    std::size_t gi =
        add_generator(name + "_inv", (label.empty() ? name : label) + "^-1");
    mark_inverse(g, gi);
    return g;
  }

  /// Checks index ranges and that every marker has its unit relations.
  void validate() const {
    const std::size_t n = generators.size();
    if (labels.size() != n) throw ValidationError("one label per generator is required");
    for (const auto& r : relators)
      for (const auto& [m, c] : r.terms())
        for (std::size_t g : m)
          if (g >= n) throw ValidationError("relator refers to a missing generator");
    const auto one = NCPolynomial::constant(1);
    for (const auto& [a, b] : inverses) {
      if (a >= n || b >= n) throw ValidationError("inverse marker out of range");
      for (const auto& need : {gen(a) * gen(b) - one, gen(b) * gen(a) - one}) {
        bool found = false;
        for (const auto& r : relators) found = found || r == need || r == NCPolynomial() - need;
        if (!found)
          throw ValidationError("generator " + generators[a] + " is marked invertible without " +
                                "its unit relations");
      }
    }
  }

  std::string relator_text(std::size_t i) const {
    return relators.at(i).to_string(generators) + " = 0";
  }

  /// Human-readable block.
  std::string to_text() const {
    std::ostringstream os;
    for (const auto& c : comments) os << "# " << c << "\n";
    os << "generators " << generators.size() << ":";
    for (const auto& g : generators) os << " " << g;
    os << "\n";
    for (std::size_t g = 0; g < generators.size(); ++g)
      if (labels[g] != generators[g]) os << "  " << generators[g] << " = " << labels[g] << "\n";
    if (!inverses.empty()) {
      os << "invertible:";
      for (const auto& [a, b] : inverses) os << " " << generators[a] << "^-1=" << generators[b];
      os << "\n";
    }
    os << "relations " << relators.size() << "\n";
    for (std::size_t i = 0; i < relators.size(); ++i) os << "  " << relator_text(i) << "\n";
    return os.str();
  }
};

namespace detail {

inline bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

// "u_<name>" when the name is identifier-safe, "u<index>" otherwise.
inline std::string generator_name(const std::string& prefix, const std::string& name,
                                  std::size_t index) {
  return is_identifier(name) ? prefix + "_" + name : prefix + std::to_string(index);
}

// Builds the u-part shared by A' and B' for a finite groupoid and returns the
// polynomial standing for u_x (1 for identities of a one-object groupoid).
struct FiniteUPart {
  std::vector<NCPolynomial> u;  // per morphism
};

inline FiniteUPart add_finite_u_part(RingPresentation& pres, const FiniteDeltaGroupoid& g) {
  const std::size_t n = g.num_morphisms();
  const bool one_object = g.num_objects() == 1;
  FiniteUPart part;
  part.u.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (one_object && g.is_identity(x)) {
      part.u[x] = NCPolynomial::constant(1);
      continue;
    }
    std::size_t gi = pres.add_generator(generator_name("u", g.name(x), x), "u[" + g.name(x) + "]");
    part.u[x] = NCPolynomial::generator(gi);
  }
  NCPolynomial sum_of_identities;
  for (std::size_t a = 0; a < g.num_objects(); ++a)
    sum_of_identities = sum_of_identities + part.u[g.identity(a)];
  pres.add_relation(sum_of_identities, NCPolynomial::constant(1));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t xy = g.compose(x, y);
      if (xy == FiniteDeltaGroupoid::none) pres.add_relator(part.u[x] * part.u[y]);
      else pres.add_relation(part.u[x] * part.u[y], part.u[xy]);
    }
  if (one_object) {
    for (std::size_t x = 0; x < n; ++x) {
      if (g.is_identity(x)) continue;
      std::size_t xi = g.inverse(x);
      if (x <= xi) {
        auto a = pres.find_generator(generator_name("u", g.name(x), x));
        auto b = pres.find_generator(generator_name("u", g.name(xi), xi));
        pres.inverses.emplace_back(*a, *b);
      }
    }
  }
  return part;
}

struct PresentedUPart {
  std::vector<NCPolynomial> u;         // per arrow
  std::vector<NCPolynomial> identity;  // per node: 1 or e_A
};

inline PresentedUPart add_presented_u_part(RingPresentation& pres, const DeltaPresentation& p) {
  PresentedUPart part;
  const bool one_node = p.num_nodes() == 1;
  for (std::size_t a = 0; a < p.num_nodes(); ++a) {
    if (one_node) {
      part.identity.push_back(NCPolynomial::constant(1));
    } else {
      std::size_t gi = pres.add_generator(generator_name("e", p.node_names[a], a),
                                          "1[" + p.node_names[a] + "]");
      part.identity.push_back(NCPolynomial::generator(gi));
    }
  }
  for (std::size_t x = 0; x < p.num_arrows(); ++x) {
    std::size_t gi =
        pres.add_generator(generator_name("u", p.arrow_names[x], x), "u[" + p.arrow_names[x] + "]");
    part.u.push_back(NCPolynomial::generator(gi));
  }
  if (!one_node) {
    NCPolynomial sum;
    for (std::size_t a = 0; a < p.num_nodes(); ++a) {
      sum = sum + part.identity[a];
      for (std::size_t b = 0; b < p.num_nodes(); ++b) {
        if (a == b) pres.add_relation(part.identity[a] * part.identity[a], part.identity[a]);
        else pres.add_relator(part.identity[a] * part.identity[b]);
      }
    }
    pres.add_relation(sum, NCPolynomial::constant(1));
    for (std::size_t x = 0; x < p.num_arrows(); ++x) {
      pres.add_relation(part.identity[p.dom[x]] * part.u[x], part.u[x]);
      pres.add_relation(part.u[x] * part.identity[p.cod[x]], part.u[x]);
    }
  }
  for (std::size_t x = 0; x < p.num_arrows(); ++x) {
    pres.add_relation(part.u[x] * part.u[p.inv[x]], part.identity[p.dom[x]]);
    if (one_node && x <= p.inv[x]) pres.inverses.emplace_back(x, p.inv[x]);
  }
  for (const auto& e : p.products) pres.add_relation(part.u[e.x] * part.u[e.y], part.u[e.xy]);
  return part;
}

}  // namespace detail

/// A'G for a finite Δ-groupoid: the groupoid ring (non-composable products
/// vanish, the identities sum to 1) modulo u_x + u_{k(x)} = u_{1_{dom x}} for
/// x in H.  With one object the identity is 1 and is not a generator.
inline RingPresentation aprime_presentation(const FiniteDeltaGroupoid& g) {
  RingPresentation pres;
  pres.comments.push_back("A' ring of a finite Δ-groupoid with " +
                          std::to_string(g.num_morphisms()) + " morphisms");
  if (g.empty()) {
    pres.comments.push_back("empty groupoid: the ring Z");
    return pres;
  }
  auto part = detail::add_finite_u_part(pres, g);
  for (std::size_t x : g.h())
    pres.add_relation(part.u[x] + part.u[g.k(x)], part.u[g.identity(g.dom(x))]);
  pres.validate();
  return pres;
}

/// A'G for a presented Δ-groupoid: generators u_x for the arrows (and
/// orthogonal idempotents e_A for the nodes when there is more than one).
inline RingPresentation aprime_presentation(const DeltaPresentation& p) {
  RingPresentation pres;
  pres.comments.push_back("A' ring of a presented Δ-groupoid with " +
                          std::to_string(p.num_arrows()) + " arrows");
  auto part = detail::add_presented_u_part(pres, p);
  for (std::size_t x = 0; x < p.num_arrows(); ++x)
    pres.add_relation(part.u[x] + part.u[p.k(x)], part.identity[p.dom[x]]);
  pres.validate();
  return pres;
}

/// B'G for a finite Δ-groupoid: additional generators v_x with
/// v_{xy} = u_x v_y + v_x on composable pairs and u_{k(x)} = v_x,
/// v_{k(x)} = u_x on H.  With one object v_1 = 0 is substituted.
inline RingPresentation bprime_presentation(const FiniteDeltaGroupoid& g) {
  RingPresentation pres;
  pres.comments.push_back("B' ring of a finite Δ-groupoid with " +
                          std::to_string(g.num_morphisms()) + " morphisms");
  if (g.empty()) {
    pres.comments.push_back("empty groupoid: the ring Z");
    return pres;
  }
  auto part = detail::add_finite_u_part(pres, g);
  const std::size_t n = g.num_morphisms();
  const bool one_object = g.num_objects() == 1;
  std::vector<NCPolynomial> v(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (one_object && g.is_identity(x)) continue;  // v_1 = 0
    v[x] = NCPolynomial::generator(
        pres.add_generator(detail::generator_name("v", g.name(x), x), "v[" + g.name(x) + "]"));
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t xy = g.compose(x, y);
      if (xy != FiniteDeltaGroupoid::none) pres.add_relation(v[xy], part.u[x] * v[y] + v[x]);
    }
  for (std::size_t x : g.h()) {
    pres.add_relation(part.u[g.k(x)], v[x]);
    pres.add_relation(v[g.k(x)], part.u[x]);
  }
  pres.validate();
  return pres;
}

/// B'G for a presented Δ-groupoid.  The cocycle rule on x·i(x) = 1_A gives
/// v_{1_A} = u_x v_{i(x)} + v_x; v_{1_A} is 0 for one node and a generator
/// annihilated by e_A otherwise.
inline RingPresentation bprime_presentation(const DeltaPresentation& p) {
  RingPresentation pres;
  pres.comments.push_back("B' ring of a presented Δ-groupoid with " +
                          std::to_string(p.num_arrows()) + " arrows");
  auto part = detail::add_presented_u_part(pres, p);
  const bool one_node = p.num_nodes() == 1;
  std::vector<NCPolynomial> v_identity(p.num_nodes());
  if (!one_node) {
    for (std::size_t a = 0; a < p.num_nodes(); ++a) {
      v_identity[a] = NCPolynomial::generator(pres.add_generator(
          detail::generator_name("v_e", p.node_names[a], a), "v[1[" + p.node_names[a] + "]]"));
      pres.add_relator(part.identity[a] * v_identity[a]);
    }
  }
  std::vector<NCPolynomial> v;
  for (std::size_t x = 0; x < p.num_arrows(); ++x)
    v.push_back(NCPolynomial::generator(pres.add_generator(
        detail::generator_name("v", p.arrow_names[x], x), "v[" + p.arrow_names[x] + "]")));
  for (std::size_t x = 0; x < p.num_arrows(); ++x)
    pres.add_relation(v_identity[p.dom[x]], part.u[x] * v[p.inv[x]] + v[x]);
  for (const auto& e : p.products) pres.add_relation(v[e.xy], part.u[e.x] * v[e.y] + v[e.x]);
  for (std::size_t x = 0; x < p.num_arrows(); ++x) {
    pres.add_relation(part.u[p.k(x)], v[x]);
    pres.add_relation(v[p.k(x)], part.u[x]);
  }
  pres.validate();
  return pres;
}

/// The ring of special representations of the trefoil pair, generated by
/// s_a, s_b (invertible), v_a, v_b with s_a^2 = s_b^3, v_a = v_b and
/// v_a(1+s_a) = v_b(1+s_b+s_b^2) = 0.
inline RingPresentation trefoil_hat_r_presentation() {
  RingPresentation pres;
  pres.comments.push_back("trefoil group pair: <a,b | a^2 = b^3>, H = <ab^-1, a^2>");
  pres.add_invertible("s_a");
  pres.add_invertible("s_b");
  pres.add_generator("v_a");
  pres.add_generator("v_b");
  const auto one = NCPolynomial::constant(1);
  auto sa = pres.gen("s_a"), sb = pres.gen("s_b"), va = pres.gen("v_a"), vb = pres.gen("v_b");
  pres.add_relation(sa * sa, sb * sb * sb);
  pres.add_relation(va, vb);
  pres.add_relator(va * (one + sa));
  pres.add_relator(vb * (one + sb + sb * sb));
  pres.validate();
  return pres;
}

/// The same ring for the figure-eight pair <a1, a2 | a1 w = w a2>,
/// w = a2^-1 a1 a2 a1^-1, H = <a1, w w̄>, w̄ = a1^-1 a2 a1 a2^-1.
inline RingPresentation fig8_hat_r_presentation() {
  RingPresentation pres;
  pres.comments.push_back(
      "figure-eight group pair: <a1,a2 | a1 w = w a2>, w = a2^-1 a1 a2 a1^-1, H = <a1, w w'>");
  pres.add_invertible("s_a1");
  pres.add_invertible("s_a2");
  pres.add_generator("v_a1");
  pres.add_generator("v_a2");
  const auto one = NCPolynomial::constant(1);
  auto s1 = pres.gen("s_a1"), s1i = pres.gen("s_a1_inv");
  auto s2 = pres.gen("s_a2"), s2i = pres.gen("s_a2_inv");
  auto v1 = pres.gen("v_a1"), v2 = pres.gen("v_a2");
  auto sw = s2i * s1 * s2 * s1i;
  auto swbar = s1i * s2 * s1 * s2i;
  auto vw = v2 * (s1i - sw);
  auto vwbar = NCPolynomial() - v2 * (one - s1) * s2i;
  pres.add_relation(s1 * sw, sw * s2);
  pres.add_relator(v1);
  pres.add_relator(vwbar + vw * swbar);
  pres.add_relation(vw * (one - s2), v2);
  pres.validate();
  return pres;
}

/// The presentation of S itself (generators p, r, x).
inline RingPresentation s_presentation(const std::vector<std::string>& generators,
                                       const std::vector<NCPolynomial>& relations) {
  RingPresentation pres;
  for (const auto& g : generators) pres.add_generator(g);
  for (const auto& r : relations) pres.add_relator(r);
  pres.validate();
  return pres;
}

using Assignment = std::map<std::string, IntVector>;

/// Evaluates every relator at the assigned images (missing formal inverses
/// are computed in `alg`) and checks the invertible markers.
inline CheckReport eval_hom(const RingPresentation& pres, const Assignment& assign,
                            const FiniteRankAlgebra& alg) {
  CheckReport rep;
  const std::size_t n = pres.generators.size();
  std::vector<std::optional<IntVector>> image(n);
  for (std::size_t g = 0; g < n; ++g) {
    auto it = assign.find(pres.generators[g]);
    if (it != assign.end()) {
      if (it->second.size() != alg.rank())
        throw ValidationError("image of " + pres.generators[g] + " has the wrong length");
      image[g] = alg.reduce(it->second);
    }
  }
  for (const auto& [a, b] : pres.inverses) {
    for (auto [from, to] : {std::pair{a, b}, std::pair{b, a}}) {
      if (image[to] || !image[from]) continue;
      auto inv = alg.inverse(*image[from]);
      if (inv) image[to] = *inv;
      else
        rep.add(pres.generators[from] + " is invertible", false,
                "image " + alg.format(*image[from]) + " is not a unit");
    }
  }
  for (std::size_t g = 0; g < n; ++g)
    if (!image[g]) {
      if (rep.failures() > 0) return rep;
      throw ValidationError("no image assigned to generator " + pres.generators[g]);
    }
  for (std::size_t i = 0; i < pres.relators.size(); ++i) {
    IntVector v = alg.zero_vector();
    for (const auto& [mono, c] : pres.relators[i].terms()) {
      IntVector m = alg.unit_vector();
      for (std::size_t g : mono) m = alg.mul(m, *image[g]);
      v = alg.add(v, alg.scale(c, m));
    }
    const bool ok = alg.is_zero(v);
    rep.add(pres.relator_text(i), ok, ok ? "" : "residue " + alg.format(v));
  }
  for (const auto& [a, b] : pres.inverses) {
    const bool ok = alg.equal(alg.mul(*image[a], *image[b]), alg.unit_vector()) &&
                    alg.equal(alg.mul(*image[b], *image[a]), alg.unit_vector());
    rep.add(pres.generators[a] + " is invertible", ok);
  }
  return rep;
}

/// Convenience: images given as expressions parsed in `alg`.
inline CheckReport eval_hom(const RingPresentation& pres,
                            const std::map<std::string, std::string>& assign,
                            const FiniteRankAlgebra& alg) {
  Assignment a;
  for (const auto& [k, e] : assign) a[k] = alg.parse(e).coords();
  return eval_hom(pres, a, alg);
}

}  // namespace dgw
