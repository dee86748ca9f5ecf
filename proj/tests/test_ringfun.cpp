#include <catch_amalgamated.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <random>

#include <json.hpp>

#include "dgw/deltacore/constructions.hpp"
#include "dgw/grouppair/group_pair.hpp"
#include "dgw/grouppair/representation.hpp"
#include "dgw/ringfun/functors.hpp"
#include "dgw/ringfun/hurwitz.hpp"
#include "dgw/ringfun/json.hpp"
#include "dgw/ringfun/presentation.hpp"
#include "dgw/ringfun/s_algebra.hpp"

using namespace dgw;

namespace {

FiniteRankAlgebra zmod_algebra(long n) {
  return FiniteRankAlgebra({"1"}, {Integer(n)}, {IntVector{1}}, {1});
}

std::string describe(const std::vector<AlgebraViolation>& v) {
  std::string s;
  for (const auto& x : v) s += x.check + ": " + x.witness + "\n";
  return s;
}

// The same groupoid with its morphisms renumbered by `perm`.
FiniteDeltaGroupoid relabel(const FiniteDeltaGroupoid& g, const std::vector<std::size_t>& perm) {
  const auto& d = g.data();
  const std::size_t m = g.num_morphisms();
  const std::size_t none = FiniteDeltaGroupoid::none;
  FiniteDeltaGroupoid::Data out;
  out.num_objects = d.num_objects;
  out.object_names = d.object_names;
  out.names.resize(m);
  out.dom.resize(m);
  out.cod.resize(m);
  out.compose.assign(m * m, none);
  for (std::size_t x = 0; x < m; ++x) {
    out.names[perm[x]] = d.names[x];
    out.dom[perm[x]] = d.dom[x];
    out.cod[perm[x]] = d.cod[x];
    for (std::size_t y = 0; y < m; ++y) {
      std::size_t xy = d.compose[x * m + y];
      out.compose[perm[x] * m + perm[y]] = xy == none ? none : perm[xy];
    }
  }
  for (std::size_t k = 0; k < d.h.size(); ++k) {
    out.h.push_back(perm[d.h[k]]);
    out.j.push_back(perm[d.j[k]]);
  }
  return FiniteDeltaGroupoid(std::move(out));
}

// Images of the A' presentation generators in the computed quotient.
Assignment quotient_assignment(const RingPresentation& pres, const FiniteDeltaGroupoid& g,
                               const QuotientAlgebra& q) {
  Assignment a;
  for (std::size_t x = 0; x < g.num_morphisms(); ++x) {
    auto it = std::find(pres.labels.begin(), pres.labels.end(), "u[" + g.name(x) + "]");
    if (it == pres.labels.end()) continue;
    IntVector e(g.num_morphisms());
    e[x] = 1;
    a[pres.generators[static_cast<std::size_t>(it - pres.labels.begin())]] = q.project(e);
  }
  return a;
}

}  // namespace

TEST_CASE("finite-rank algebras", "[ringfun]") {
  auto z = FiniteRankAlgebra::integers();
  CHECK(z.certificate().empty());
  CHECK(z.additive_group().to_string() == "Z");

  auto gauss = FiniteRankAlgebra::monic_quotient({1, 0});  // t^2 = -1
  CHECK(gauss.certificate().empty());
  CHECK(gauss.parse("t*t") == gauss.constant(-1));
  CHECK(gauss.is_unit(gauss.parse("t").coords()));
  CHECK_FALSE(gauss.is_unit(gauss.parse("1+t").coords()));
  CHECK(gauss.is_unit_over_q(gauss.parse("1+t").coords()));
  CHECK(gauss.is_commutative());

  SECTION("the certificate rejects a table whose unit is only a left unit") {
    // e * 1 = 0
    FiniteRankAlgebra bad({"1", "e"}, {0, 0},
                          {IntVector{1, 0}, IntVector{0, 1}, IntVector{0, 0}, IntVector{1, 1}},
                          {1, 0});
    CHECK_FALSE(bad.certificate().empty());
  }
  SECTION("quotient by the unit is the zero ring") {
    auto s = s_algebra();
    auto q = quotient_algebra(s, {s.one()});
    CHECK(q.algebra.rank() == 0);
    CHECK(q.algebra.additive_group().is_trivial());
  }
  SECTION("torsion quotient") {
    auto q = quotient_algebra(gauss, {gauss.parse("3")});
    CHECK(q.algebra.additive_group().to_string() == "Z/3 + Z/3");
    CHECK(q.algebra.certificate().empty());
  }
}

TEST_CASE("noncommutative polynomials", "[ringfun]") {
  const std::vector<std::string> names{"p", "r", "x"};
  auto rel = NCPolynomial::parse("r*x + x*r = r - r^2", names);
  CHECK(rel.degree() == 2);
  CHECK(rel.terms().size() == 4);
  CHECK(NCPolynomial::parse(rel.to_string(names), names).terms() == rel.terms());
  CHECK_FALSE(NCPolynomial::parse("r*x - x*r", names).is_zero());
  CHECK(NCPolynomial::parse("(r+x)^2 - r^2 - r*x - x*r - x^2", names).is_zero());
  CHECK_THROWS_AS(NCPolynomial::parse("r*y", names), ValidationError);
}

TEST_CASE("the structure constants of S", "[ringfun]") {
  const FiniteRankAlgebra s = s_algebra();
  INFO(describe(s.certificate()));
  CHECK(s.certificate().empty());
  CHECK(s.additive_group().to_string() == "Z^6");

  SECTION("re-derivation from the relations reproduces the frozen table") {
    DerivationResult d = derive_s_algebra();
    REQUIRE(d.algebra.rank() == 6);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j)
        CHECK(d.algebra.structure_constant(i, j) == s.structure_constant(i, j));
  }
  SECTION("the golden file matches") {
    std::ifstream f(std::string(DGW_DATA_DIR) + "/s_algebra.json");
    REQUIRE(f);
    nlohmann::json j = nlohmann::json::parse(f);
    FiniteRankAlgebra g = algebra_from_json(j);
    REQUIRE(g.rank() == 6);
    CHECK(g.names() == s.names());
    for (std::size_t a = 0; a < 6; ++a)
      for (std::size_t b = 0; b < 6; ++b)
        CHECK(g.structure_constant(a, b) == s.structure_constant(a, b));
    CHECK(j.at("relations").get<std::vector<std::string>>() == s_relation_texts());
  }
  SECTION("the defining relations hold") {
    auto p = s.parse("p"), r = s.parse("r"), x = s.parse("x");
    CHECK(x * x == x - p);
    CHECK(p * x == x + 3 * p + r * r - 1);
    CHECK(p * r == r);
    CHECK(r * x + x * r == r - r * r);
    CHECK(p * p == 1 - 4 * p - 2 * r * r);
    CHECK(s_relation_check(s, p.coords(), r.coords(), x.coords()).ok());
  }
  SECTION("associativity on all 216 basis triples") {
    std::size_t bad = 0;
    for (std::size_t a = 0; a < 6; ++a)
      for (std::size_t b = 0; b < 6; ++b)
        for (std::size_t c = 0; c < 6; ++c) {
          auto ea = s.basis_element(a), eb = s.basis_element(b), ec = s.basis_element(c);
          if (!((ea * eb) * ec == ea * (eb * ec))) ++bad;
        }
    CHECK(bad == 0);
  }
  SECTION("S is noncommutative with center spanned by 1, p, r^2") {
    CHECK_FALSE(s.is_commutative());
    CHECK_FALSE(s.parse("r*x") == s.parse("x*r"));
    // center = kernel of c -> (c b - b c)_b
    IntMatrix m(36, 6);
    for (std::size_t c = 0; c < 6; ++c)
      for (std::size_t b = 0; b < 6; ++b) {
        IntVector d = s.sub(s.mul(s.basis_vector(c), s.basis_vector(b)),
                            s.mul(s.basis_vector(b), s.basis_vector(c)));
        for (std::size_t k = 0; k < 6; ++k) m(b * 6 + k, c) = d[k];
      }
    IntMatrix center = kernel(m);
    CHECK(center.cols() == 3);
    for (const char* e : {"1", "p", "r^2"}) {
      INFO(e);
      CHECK(in_span(center, s.parse(e).coords()));
      CHECK(s.commutes_with_basis(s.parse(e).coords()));
    }
    CHECK_FALSE(s.commutes_with_basis(s.parse("x").coords()));
  }
}

TEST_CASE("the ideal generated by a = 2+2p+r+2x+3r^2+rx", "[ringfun]") {
  const FiniteRankAlgebra s = s_algebra();
  auto rep = lemma15_check(s);
  INFO(rep.to_string());
  CHECK(rep.ok());
  CHECK(rep.items.size() == 7);

  SECTION("a corrupted cofactor is caught") {
    auto bad = lemma15_check(s, "1-x-r^2-rx");
    CHECK_FALSE(bad.ok());
    // the lattice membership does not depend on the cofactors
    CHECK(bad.find("{2, r, 1-p} in ideal lattice of (a)")->ok);
  }
  SECTION("(a) = (2, r, 1-p), so S/(a) is Z[t]/(2, t^2+t+1), the field with four elements") {
    auto qa = quotient_algebra(s, {s.parse("2+2p+r+2x+3r^2+rx")});
    auto qb = quotient_algebra(s, {s.parse("2"), s.parse("r"), s.parse("1-p")});
    CHECK(qa.algebra.additive_group().to_string() == "Z/2 + Z/2");
    CHECK(qb.algebra.additive_group() == qa.algebra.additive_group());
    CHECK(qa.algebra.is_commutative());
  }
}

TEST_CASE("quotients of S", "[ringfun]") {
  auto mod_r = s_mod_r_check();
  INFO(mod_r.to_string());
  CHECK(mod_r.ok());
  auto hw = s_hurwitz_check();
  INFO(hw.to_string());
  CHECK(hw.ok());
}

TEST_CASE("Hurwitz quaternions", "[ringfun]") {
  auto h = hurwitz();
  CHECK(h.certificate().empty());
  CHECK(h.parse("i*j") == h.parse("k"));
  CHECK(h.parse("j*i") == -h.parse("k"));
  CHECK(h.parse("i*i") == h.constant(-1));
  CHECK(h.is_unit(h.parse("w").coords()));  // (1+i+j+k)/2
  CHECK_FALSE(h.is_unit(h.parse("1+i").coords()));
  CHECK(hurwitz_doubled_coordinates(h.parse("w").coords()) == std::array<Integer, 4>{1, 1, 1, 1});
}

TEST_CASE("the invertibility criterion for p = x - x^2", "[ringfun]") {
  SECTION("Hurwitz quaternions, p = 1") {
    auto h = hurwitz();
    auto rep = lemma20_instance_check(h, h.unit_vector(), h.parse("(1-i-j+k)/2").coords());
    INFO(rep.to_string());
    CHECK(rep.ok());
    CHECK(rep.items.size() == 2);
  }
  SECTION("Z[t]/(t^2-3t+1), p = 1 - 2t") {
    auto z = FiniteRankAlgebra::monic_quotient({1, -3});
    auto rep = lemma20_instance_check(z, z.parse("1-2t").coords(), z.parse("t").coords());
    INFO(rep.to_string());
    CHECK(rep.ok());
    CHECK(rep.items.size() == 2);
    CHECK(rep.notes.front() == "q = 0");
  }
  SECTION("S itself") {
    auto s = s_algebra();
    auto rep = lemma20_instance_check(s, s.parse("p").coords(), s.parse("x").coords());
    INFO(rep.to_string());
    CHECK(rep.ok());
    CHECK(rep.items.size() == 2);
    CHECK(rep.notes.front() == "q = r^2");
  }
  SECTION("hypotheses failing: no checks, only notes") {
    auto z = FiniteRankAlgebra::integers();
    auto rep = lemma20_instance_check(z, z.zero_vector(), z.zero_vector());
    CHECK(rep.items.empty());
    CHECK(rep.notes.back().rfind("equivalence without hypotheses", 0) == 0);
  }
}

TEST_CASE("A' and B' of finite groupoids", "[ringfun]") {
  auto z3 = FiniteRing::zmod(3);
  // Oracle for A'(ring_A(Z/3)): Z[C2] = Z1 + Zu with the single relation
  // 2u - 1 = 0 and its multiple u(2u - 1) = 2 - u; cokernel of the 2x2 matrix.
  const auto oracle = cokernel_invariants(IntMatrix{{-1, 2}, {2, -1}});
  CHECK(oracle.to_string() == "Z/3");
  CHECK(aprime_finite(ring_A(z3)).additive_group() == oracle);
  CHECK(bprime_finite(ring_B(z3)).additive_group().to_string() == "Z/3");

  struct Case {
    const char* name;
    FiniteDeltaGroupoid g;
    const char* aprime;
  };
  auto s3 = GroupTable::symmetric(3);
  std::vector<Case> cases{
      {"ring_A(Z/2)", ring_A(FiniteRing::zmod(2)), "Z"},
      {"ring_A(Z/5)", ring_A(FiniteRing::zmod(5)), "Z/5"},
      {"empty", empty_groupoid(), "Z"},
      {"pair_delta(Z/2)", pair_delta(GroupTable::cyclic(2)), "0"},
      {"pair_delta(Z/3)", pair_delta(GroupTable::cyclic(3)), "0"},
      {"triple_delta(2)", triple_delta(2), "0"},
      {"(S3, <(0 1)>)", delta_from_pair(GroupPair::generated(s3, {"(0 1)"})), "Z/3"},
  };
  for (const auto& c : cases) {
    INFO(c.name);
    auto a = aprime_finite(c.g);
    CHECK(a.additive_group().to_string() == c.aprime);
    CHECK(a.certificate().empty());
  }
  CHECK(bprime_finite(ring_B(FiniteRing::zmod(2))).additive_group().to_string() == "Z");
  CHECK(bprime_finite(empty_groupoid()).additive_group().to_string() == "Z");
  CHECK(bprime_finite(pair_delta(GroupTable::cyclic(2))).additive_group().is_trivial());
  CHECK(bprime_finite(pair_delta(GroupTable::cyclic(3))).additive_group().is_trivial());

  SECTION("independent of the numbering of morphisms") {
    std::mt19937 rng(7);
    for (const auto& c : cases) {
      if (c.g.num_morphisms() == 0) continue;
      std::vector<std::size_t> perm(c.g.num_morphisms());
      std::iota(perm.begin(), perm.end(), std::size_t{0});
      std::shuffle(perm.begin(), perm.end(), rng);
      auto g2 = relabel(c.g, perm);
      INFO(c.name);
      CHECK(aprime_finite(g2).additive_group() == aprime_finite(c.g).additive_group());
      if (c.g.num_objects() == 1 || std::string(c.name).rfind("pair_delta", 0) == 0)
        CHECK(bprime_finite(g2).additive_group() == bprime_finite(c.g).additive_group());
    }
  }
  SECTION("the emitted presentation holds in the computed quotient") {
    for (const auto& c : cases) {
      if (c.g.num_morphisms() == 0) continue;
      INFO(c.name);
      auto pres = aprime_presentation(c.g);
      auto q = aprime_quotient(c.g);
      auto rep = eval_hom(pres, quotient_assignment(pres, c.g, q), q.algebra);
      INFO(rep.to_string());
      CHECK(rep.ok());
    }
  }
}

TEST_CASE("A' presentations of one-object groupoids", "[ringfun]") {
  SECTION("trivial group with empty H: no generators, ring Z") {
    FiniteDeltaGroupoid::Data d;
    d.num_objects = 1;
    d.names = {"e"};
    d.dom = {0};
    d.cod = {0};
    d.compose = {0};
    FiniteDeltaGroupoid g(std::move(d));
    auto pres = aprime_presentation(g);
    CHECK(pres.generators.empty());
    CHECK(aprime_finite(g).additive_group().to_string() == "Z");
  }
  SECTION("(S3, <(0 1)>): u^2 = 1 and 2u = 1") {
    auto g = delta_from_pair(GroupPair::generated(GroupTable::symmetric(3), {"(0 1)"}));
    auto pres = aprime_presentation(g);
    REQUIRE(pres.generators.size() == 1);
    const std::string u = pres.generators[0];
    auto z3 = zmod_algebra(3);
    CHECK(eval_hom(pres, {{u, "2"}}, z3).ok());   // 2 * 2 = 1 mod 3
    CHECK_FALSE(eval_hom(pres, {{u, "1"}}, z3).ok());
    CHECK_FALSE(eval_hom(pres, {{u, "-1"}}, FiniteRankAlgebra::integers()).ok());
  }
}

TEST_CASE("special representation rings map to the examples", "[ringfun]") {
  SECTION("trefoil into Z[t]/(t^2-t+1)") {
    auto ring = presets::trefoil_ring();
    auto pres = trefoil_hat_r_presentation();
    std::map<std::string, std::string> good{
        {"s_a", "-1"}, {"s_b", "t-1"}, {"v_a", "1"}, {"v_b", "1"}};
    auto rep = eval_hom(pres, good, ring);
    INFO(rep.to_string());
    CHECK(rep.ok());
    auto bad = good;
    bad["s_a"] = "1";
    CHECK_FALSE(eval_hom(pres, bad, ring).ok());
  }
  SECTION("figure-eight into S") {
    auto s = s_algebra();
    auto rep = eval_hom(fig8_hat_r_presentation(),
                        {{"s_a1", "x"}, {"s_a2", "x+r"}, {"v_a1", "0"}, {"v_a2", "1"}}, s);
    INFO(rep.to_string());
    CHECK(rep.ok());
    CHECK_FALSE(eval_hom(fig8_hat_r_presentation(),
                         {{"s_a1", "x"}, {"s_a2", "x"}, {"v_a1", "0"}, {"v_a2", "1"}}, s)
                    .ok());
  }
  SECTION("S satisfies its own presentation") {
    auto s = s_algebra();
    auto pres = s_presentation(s_generators(), s_relations());
    CHECK(eval_hom(pres, {{"p", "p"}, {"r", "r"}, {"x", "x"}}, s).ok());
    CHECK_FALSE(eval_hom(pres, {{"p", "p"}, {"r", "x"}, {"x", "r"}}, s).ok());
  }
}

TEST_CASE("JSON round trips", "[ringfun]") {
  for (const auto& alg : {s_algebra(), hurwitz(), zmod_algebra(7)}) {
    auto back = algebra_from_json(algebra_to_json(alg));
    CHECK(algebra_to_json(back) == algebra_to_json(alg));
    CHECK(back.additive_group() == alg.additive_group());
  }
  auto pres = fig8_hat_r_presentation();
  auto back = presentation_from_json(presentation_to_json(pres));
  CHECK(back.to_text() == pres.to_text());
  CHECK(back.inverses == pres.inverses);
}
