#include <catch_amalgamated.hpp>

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "dgw/deltacore/constructions.hpp"
#include "dgw/deltacore/delta_table.hpp"
#include "dgw/homology/homology.hpp"
#include "dgw/tetra/completion.hpp"
#include "dgw/tetra/pachner.hpp"
#include "support/trefoil_reference.hpp"

using namespace dgw;

namespace {

DeltaTable knot_table(const Triangulation& t) { return mu_table(complete(t).presentation); }

DeltaTable preset_table(const std::string& name) { return knot_table(*presets::find(name)); }

Triangulation five_one() {
  std::ifstream in(std::string(DGW_DATA_DIR) + "/5_1.tri");
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_triangulation(ss.str());
}

InvariantFactors z(std::size_t rank) {
  InvariantFactors f;
  f.free_rank = rank;
  return f;
}

InvariantFactors cyclic(long d) {
  InvariantFactors f;
  f.torsion.push_back(d);
  return f;
}

// Independent description of C_n = Z^{V_n} / <x + s x>: each orbit of the
// generators contributes Z if the relations x = -s x can be sign-consistent
// on it (a 2-colouring of the orbit graph, loops forbidden), and Z/2
// otherwise.
InvariantFactors orbit_oracle(const TupleComplex& tc, long n) {
  const std::size_t dim = tc.size(n);
  std::vector<std::vector<std::size_t>> acts;
  for (std::size_t s = 1; s <= static_cast<std::size_t>(n); ++s) acts.push_back(tc.action(n, s));
  std::vector<int> colour(dim, -1);
  InvariantFactors f;
  for (std::size_t start = 0; start < dim; ++start) {
    if (colour[start] != -1) continue;
    bool consistent = true;
    colour[start] = 0;
    std::vector<std::size_t> stack{start};
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      for (const auto& a : acts) {
        std::size_t y = a[x];
        if (colour[y] == -1) {
          colour[y] = 1 - colour[x];
          stack.push_back(y);
        } else if (colour[y] == colour[x]) {
          consistent = false;
        }
      }
    }
    if (consistent) ++f.free_rank;
    else f.torsion.push_back(2);
  }
  return f;
}

void require_structure(const TupleComplex& tc) {
  auto v = check_complex(tc);
  INFO((v.empty() ? std::string() : v.front().check + ": " + v.front().witness));
  CHECK(v.empty());
}

}  // namespace

TEST_CASE("star operation agrees with its alternative form", "[homology]") {
  for (auto g : {pair_delta(GroupTable::cyclic(2)), pair_delta(GroupTable::symmetric(3)),
                 triple_delta(3)}) {
    TupleComplex tc(delta_table(g), {3, std::nullopt});
    const auto& t = tc.table();
    std::size_t compared = 0;
    for (auto [x, y] : t.h_composable_pairs()) {
      auto alt = tc.star_alt(x, y);
      REQUIRE(alt.has_value());
      CHECK(tc.star(x, y) == *alt);
      ++compared;
    }
    CHECK(compared == t.h_composable_pairs().size());
  }
  auto tref = TupleComplex(testing::trefoil_reference());
  for (auto [x, y] : tref.table().h_composable_pairs()) {
    auto alt = tref.star_alt(x, y);
    REQUIRE(alt.has_value());
    CHECK(tref.star(x, y) == *alt);
  }
  // x * x = j(k(x) j(x)) with k(x) = i j i(x) = x^-1 and j(x) = x^-1, so
  // x * x = j(x^-2) = xy
  CHECK(tref.table().names[tref.star(0, 0)] == "xy");
}

TEST_CASE("low-degree boundaries", "[homology]") {
  TupleComplex tc(preset_table("fig8"));
  const auto& t = tc.table();
  auto d1 = tc.boundary(1);
  for (std::size_t e = 0; e < tc.size(1); ++e) {
    // column of A is [A*] - [A]; one component, so it vanishes
    Integer sum = 0;
    for (std::size_t r = 0; r < d1.rows(); ++r) sum += d1(r, e);
    CHECK(sum == 0);
  }
  auto d0 = tc.boundary(0);
  for (std::size_t e = 0; e < tc.size(0); ++e) CHECK(d0(0, e) == 1);
  // degree 2: faces cod j(x), cod x, dom x
  for (std::size_t e = 0; e < tc.size(2); ++e) {
    std::size_t x = tc.elements(2)[e][0];
    CHECK(tc.face(2, {static_cast<std::uint32_t>(x)}, 0) ==
          Tuple{static_cast<std::uint32_t>(t.cod[t.j[x]])});
    CHECK(tc.face(2, {static_cast<std::uint32_t>(x)}, 2) ==
          Tuple{static_cast<std::uint32_t>(t.dom[x])});
  }
}

TEST_CASE("degree 1 relation with a self-dual object gives 2-torsion", "[homology]") {
  // pair_delta(Z/2): check the A + A* relation through the oracle
  TupleComplex tc(delta_table(pair_delta(GroupTable::cyclic(2))));
  CHECK(cokernel_invariants(tc.a_relations(1)) == orbit_oracle(tc, 1));
  CHECK(tc.a_relations(0).cols() == 0);
  CHECK(tc.a_relations(-1).cols() == 0);
}

TEST_CASE("low-degree actions", "[homology]") {
  TupleComplex tc(preset_table("trefoil"));
  const auto& t = tc.table();
  auto s1 = tc.action(2, 1), s2 = tc.action(2, 2);
  for (std::size_t e = 0; e < tc.size(2); ++e) {
    std::size_t x = tc.elements(2)[e][0];
    CHECK(tc.elements(2)[s1[e]][0] == t.j[x]);
    CHECK(tc.elements(2)[s2[e]][0] == t.inv[x]);
  }
}

TEST_CASE("degree 3 action matches the tetrahedral object", "[homology]") {
  for (const char* name : {"trefoil", "fig8"}) {
    auto c = complete(*presets::find(name));
    TupleComplex tc(mu_table(c.presentation));
    const auto& o = c.object;
    for (std::size_t v = 0; v < o.v_size(); ++v) {
      auto [x, y] = o.tau(v);
      Tuple t{static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y)};
      REQUIRE(tc.index_of(3, t).has_value());
      for (std::size_t s = 1; s <= 3; ++s) {
        auto [gx, gy] = o.tau(o.v_act[v][s - 1]);
        CHECK(tc.act(3, t, s) ==
              Tuple{static_cast<std::uint32_t>(gx), static_cast<std::uint32_t>(gy)});
      }
    }
  }
}

TEST_CASE("tuple counts", "[homology]") {
  auto sizes = [](const TupleComplex& tc) {
    std::vector<std::size_t> s;
    for (long n = -1; n <= tc.top_degree(); ++n) s.push_back(tc.size(n));
    return s;
  };
  CHECK(sizes(TupleComplex(preset_table("trefoil"))) == std::vector<std::size_t>{1, 1, 2, 8, 12});
  CHECK(sizes(TupleComplex(preset_table("fig8"))) == std::vector<std::size_t>{1, 1, 4, 24, 48});
  CHECK(sizes(TupleComplex(knot_table(five_one()))) ==
        std::vector<std::size_t>{1, 1, 5, 24, 48, 24});
}

TEST_CASE("empty H ends the complex early", "[homology]") {
  TupleComplex tc(delta_table(ring_A(FiniteRing::zmod(2))));
  CHECK(tc.size(2) == 0);
  CHECK(tc.top_degree() <= 1);
  auto h = homology(tc);
  CHECK_FALSE(h.truncated);
}

TEST_CASE("trefoil homology", "[homology]") {
  TupleComplex tc(preset_table("trefoil"));
  require_structure(tc);
  auto h = homology(tc);
  CHECK_FALSE(h.truncated);
  for (long n = -1; n <= 8; ++n) CHECK(h.at(n) == (n == 2 ? z(1) : z(0)));
  // the hand-built model of H gives the same answer
  CHECK(homology(testing::trefoil_reference()).at(2) == z(1));
}

TEST_CASE("figure-eight homology", "[homology]") {
  TupleComplex tc(preset_table("fig8"));
  require_structure(tc);
  auto h = homology(tc);
  for (long n = -1; n <= 8; ++n) CHECK(h.at(n) == (n == 2 || n == 3 ? z(1) : z(0)));
}

TEST_CASE("5_1 homology", "[homology]") {
  TupleComplex tc(knot_table(five_one()));
  require_structure(tc);
  auto h = homology(tc);
  CHECK(h.at(2) == z(1));
  CHECK(h.at(3) == cyclic(5));
  for (long n : {-1L, 0L, 1L, 4L, 5L}) CHECK(h.at(n) == z(0));
}

TEST_CASE("homology is unchanged by a 2-3 move on the figure-eight", "[homology]") {
  auto fig8 = *presets::find("fig8");
  auto base = homology(preset_table("fig8"));
  for (const char* face : {"a", "b", "c", "d"}) {
    TupleComplex tc(knot_table(pachner23(fig8, face, "u")));
    require_structure(tc);
    auto h = homology(tc);
    for (long n = -1; n <= 6; ++n) CHECK(h.at(n) == base.at(n));
  }
}

TEST_CASE("homology does not depend on enumeration order", "[homology]") {
  for (auto table : {preset_table("fig8"), knot_table(five_one())}) {
    auto base = homology(TupleComplex(table));
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      TupleComplex::Options opts;
      opts.shuffle_seed = seed;
      TupleComplex tc(table, opts);
      TupleComplex plain(table);
      for (long n = -1; n <= tc.top_degree(); ++n) {
        std::set<Tuple> a(tc.elements(n).begin(), tc.elements(n).end());
        std::set<Tuple> b(plain.elements(n).begin(), plain.elements(n).end());
        CHECK(a == b);
      }
      auto h = homology(tc);
      CHECK(h.groups == base.groups);
    }
  }
}

TEST_CASE("quotient modules agree with the orbit oracle", "[homology]") {
  for (auto table : {preset_table("trefoil"), preset_table("fig8"), knot_table(five_one()),
                     delta_table(pair_delta(GroupTable::cyclic(3))),
                     delta_table(triple_delta(2))}) {
    TupleComplex tc(table, {4, std::nullopt});
    for (long n = 1; n <= tc.top_degree(); ++n)
      CHECK(cokernel_invariants(tc.a_relations(n)) == orbit_oracle(tc, n));
  }
}

TEST_CASE("structure of finite Δ-groupoid complexes", "[homology]") {
  for (auto g : {pair_delta(GroupTable::cyclic(2)), pair_delta(GroupTable::cyclic(3)),
                 triple_delta(2), ring_A(FiniteRing::zmod(5))}) {
    TupleComplex tc(delta_table(g), {5, std::nullopt});
    require_structure(tc);
    CHECK_NOTHROW(homology(tc));
  }
}

TEST_CASE("degree cap and truncation", "[homology]") {
  auto table = knot_table(five_one());
  TupleComplex tc(table, {3, std::nullopt});
  CHECK(tc.truncated());
  auto h = homology(tc);
  CHECK(h.truncated);
  CHECK(h.max_degree == 3);
  CHECK(h.at(3) == cyclic(5));  // V_4 was enumerated to close ∂_4
  CHECK_THROWS_AS(h.at(4), ComputationError);

  TupleComplex full(table);
  CHECK_FALSE(full.truncated());
}
