#include <catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "dgw/deltacore/constructions.hpp"
#include "dgw/deltacore/delta_table.hpp"
#include "dgw/deltacore/strip.hpp"
#include "dgw/deltacore/vertex_group.hpp"

using namespace dgw;

namespace {

bool has_violation(const AxiomReport& r, const std::string& axiom) {
  return std::any_of(r.violations.begin(), r.violations.end(),
                     [&](const AxiomViolation& v) { return v.axiom == axiom; });
}

std::string describe(const AxiomReport& r) {
  std::string s;
  for (const auto& v : r.violations) s += v.axiom + ": " + v.witness + "\n";
  return s;
}

// k = iji = jij pointwise on H.
void require_k_consistent(const FiniteDeltaGroupoid& g) {
  for (std::size_t x : g.h()) {
    std::size_t iji = g.inverse(g.j(g.inverse(x)));
    std::size_t jij = g.j(g.inverse(g.j(x)));
    REQUIRE(iji == jij);
    REQUIRE(g.k(x) == iji);
  }
}

void require_object_involution(const FiniteDeltaGroupoid& g) {
  for (std::size_t a = 0; a < g.num_objects(); ++a) {
    std::size_t s = object_involution(g, a);
    REQUIRE(object_involution(g, s) == a);
  }
}

}  // namespace

TEST_CASE("pair groupoid sizes and axioms", "[deltacore]") {
  auto z2 = pair_delta(GroupTable::cyclic(2));
  CHECK(z2.num_morphisms() == 4);
  CHECK(z2.num_objects() == 2);
  CHECK(check_axioms(z2).passed());

  auto trivial = pair_delta(GroupTable::cyclic(1));
  CHECK(trivial.num_morphisms() == 1);
  CHECK(trivial.is_identity(0));

  for (auto g : {GroupTable::cyclic(4), GroupTable::symmetric(3)}) {
    auto d = pair_delta(g);
    auto r = check_axioms(d);
    INFO(describe(r));
    CHECK(r.passed());
    CHECK(r.pairs_checked > 0);
    require_k_consistent(d);
    require_object_involution(d);
  }
  CHECK(pair_delta(GroupTable::symmetric(3)).num_morphisms() == 36);
}

TEST_CASE("triple groupoid", "[deltacore]") {
  auto one = triple_delta(1);
  CHECK(one.num_morphisms() == 1);
  CHECK(one.is_identity(0));

  auto two = triple_delta(2);
  CHECK(two.num_morphisms() == 8);
  CHECK(two.num_objects() == 4);

  auto three = triple_delta(3);
  auto r = check_axioms(three);
  INFO(describe(r));
  CHECK(r.passed());
  require_k_consistent(three);
  // (a,b)* = (b,a); object (a,b) has index a*3+b
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      CHECK(object_involution(three, a * 3 + b) == b * 3 + a);
}

TEST_CASE("ring groupoid A", "[deltacore]") {
  CHECK(ring_A(FiniteRing::zmod(2)).empty());

  auto a3 = ring_A(FiniteRing::zmod(3));
  REQUIRE(a3.h().size() == 1);
  CHECK(a3.name(a3.h()[0]) == "2");
  CHECK(a3.num_morphisms() == 2);  // {1, 2} ≅ Z/2
  CHECK(check_axioms(a3).passed());

  for (std::size_t n : {5u, 7u}) {
    auto g = ring_A(FiniteRing::zmod(n));
    auto r = check_axioms(g);
    INFO("Z/" << n << "\n" << describe(r));
    CHECK(r.passed());
    require_k_consistent(g);
  }
}

TEST_CASE("ring groupoid B", "[deltacore]") {
  auto b2 = ring_B(FiniteRing::zmod(2));
  CHECK(b2.num_morphisms() == 2);
  REQUIRE(b2.h().size() == 1);
  CHECK(b2.j(b2.h()[0]) == b2.h()[0]);
  CHECK(b2.k(b2.h()[0]) == b2.h()[0]);
  CHECK(check_axioms(b2).passed());

  for (std::size_t n : {3u, 5u}) {
    auto g = ring_B(FiniteRing::zmod(n));
    auto r = check_axioms(g);
    INFO("Z/" << n << "\n" << describe(r));
    CHECK(r.passed());
    require_k_consistent(g);
  }
  CHECK(ring_B(FiniteRing::zmod(1)).h().empty());
}

TEST_CASE("corrupted j is detected", "[deltacore]") {
  auto g = pair_delta(GroupTable::cyclic(4));
  // Conjugate j by the transposition of two elements of H: still an
  // involution, but in general no longer compatible with i.  Every
  // corruption that breaks iji = jij (computed directly) must be reported.
  std::size_t broken = 0;
  for (std::size_t a : g.h())
    for (std::size_t b : g.h()) {
      if (a >= b) continue;
      auto sw = [&](std::size_t x) { return x == a ? b : x == b ? a : x; };
      std::vector<std::size_t> bad(g.num_morphisms());
      for (std::size_t x : g.h()) bad[x] = sw(g.j(sw(x)));
      bool iji_fails = false;
      for (std::size_t x : g.h())
        if (g.inverse(bad[g.inverse(x)]) != bad[g.inverse(bad[x])]) iji_fails = true;
      if (!iji_fails) continue;
      ++broken;
      auto r = check_axioms(g.with_j(bad));
      CHECK_FALSE(r.passed());
      CHECK(has_violation(r, "ii"));
    }
  CHECK(broken > 0);
}

TEST_CASE("finite structure parsing", "[deltacore]") {
  auto g = GroupTable::parse(
      "elem e a\n"
      "mul e e = e\nmul e a = a\nmul a e = a\nmul a a = e\n");
  CHECK(g.order() == 2);
  CHECK(g.identity() == g.find("e"));
  CHECK_THROWS_AS(GroupTable::parse("elem e a\nmul e e = e\n"), ValidationError);

  try {
    GroupTable::parse("elem e\nmul e e = q\n");
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(e.line() == 2);
  }

  auto r = FiniteRing::zmod(6);
  CHECK(r.units().size() == 2);
  CHECK(FiniteRing::zmod(1).size() == 1);
}

TEST_CASE("rational strip element operations", "[deltacore][strip]") {
  using strip::Rational;
  CHECK(strip::star(0) == 0);
  CHECK(strip::hat(0) == 1);
  CHECK(strip::star(Rational(2, 5)) == Rational(2, 5));
  CHECK(strip::hat(Rational(2, 5)) == Rational(1, 5));

  strip::Element e{Rational(3, 2), Rational(1, 2)};
  auto ke = strip::k(e);
  CHECK(ke == strip::Element{Rational(1, 4), Rational(1, 2)});
  CHECK(strip::k(ke) == e);

  CHECK_THROWS_AS(strip::k(strip::Element{Rational(1, 3), Rational(1, 3)}),
                  ValidationError);
  CHECK_THROWS_AS(strip::star(Rational(1)), ValidationError);

  for (const auto& t : strip::unit_interval_sample(12)) {
    CHECK(strip::star(strip::star(t)) == t);
    CHECK(strip::hat(strip::star(t)) == strip::hat(t));
  }
}

TEST_CASE("rational strip axioms on bounded samples", "[deltacore][strip]") {
  auto r = strip::check_samples(12);
  INFO(describe(r));
  CHECK(r.passed());
  CHECK(r.pairs_checked > 100000);
}

TEST_CASE("vertex groups of finite groupoids", "[deltacore]") {
  auto g = pair_delta(GroupTable::symmetric(3));
  auto q = quiver_relators(g);
  CHECK(vertex_group_abelianized(q, 0).is_trivial());

  // A Δ-group: the vertex group is the group itself.
  auto a7 = ring_A(FiniteRing::zmod(7));
  auto ab = vertex_group_abelianized(quiver_relators(a7), 0);
  CHECK(ab.free_rank == 0);
  CHECK(ab.to_string() == "Z/" + std::to_string(a7.num_morphisms()));

  CHECK_THROWS_AS(vertex_group(q, 99), ValidationError);
}

TEST_CASE("delta table of a finite groupoid", "[deltacore]") {
  auto g = triple_delta(2);
  auto t = delta_table(g);
  CHECK(t.size() == 8);
  CHECK(t.num_objects == 4);
  CHECK(t.num_components == 2);
  for (auto [x, y] : t.h_composable_pairs()) {
    CHECK(t.cod[x] == t.dom[y]);
    CHECK(t.dom[t.product(x, y)] == t.dom[x]);
  }
}
