#include <catch_amalgamated.hpp>

#include <random>

#include "dgw/deltacore/delta_table.hpp"
#include "dgw/deltacore/isomorphism.hpp"
#include "dgw/deltacore/rewriting.hpp"
#include "dgw/deltacore/word_problem.hpp"
#include "dgw/tetra/completion.hpp"
#include "support/trefoil_reference.hpp"

using namespace dgw;

namespace {

// One node, H = {g, g^2} of Z/3 with j = i.
DeltaPresentation cyclic3() {
  DeltaPresentation p;
  p.node_names = {"o"};
  p.arrow_names = {"g", "gg"};
  p.dom = {0, 0};
  p.cod = {0, 0};
  p.inv = {1, 0};
  p.j = {1, 0};
  p.products = {{0, 0, 1}, {1, 1, 0}};
  p.validate();
  return p;
}

std::uint32_t arrow(const DeltaPresentation& p, const std::string& name) {
  for (std::size_t x = 0; x < p.num_arrows(); ++x)
    if (p.arrow_names[x] == name) return static_cast<std::uint32_t>(x);
  FAIL("no arrow " << name);
  return 0;
}

// Random composable path of the given length.
ArrowWord random_path(const DeltaPresentation& p, std::size_t len, std::mt19937& rng) {
  ArrowWord w;
  std::uniform_int_distribution<std::size_t> pick(0, p.num_arrows() - 1);
  w.push_back(static_cast<std::uint32_t>(pick(rng)));
  while (w.size() < len) {
    std::vector<std::uint32_t> next;
    for (std::size_t x = 0; x < p.num_arrows(); ++x)
      if (p.dom[x] == p.cod[w.back()]) next.push_back(static_cast<std::uint32_t>(x));
    w.push_back(next[std::uniform_int_distribution<std::size_t>(0, next.size() - 1)(rng)]);
  }
  return w;
}

}  // namespace

TEST_CASE("shortlex order", "[rewriting]") {
  CHECK(shortlex_less({5}, {0, 0}));
  CHECK(shortlex_less({0, 1}, {0, 2}));
  CHECK_FALSE(shortlex_less({0, 2}, {0, 2}));
  CHECK(shortlex_less({}, {0}));
}

TEST_CASE("cyclic group of order three", "[rewriting]") {
  auto p = cyclic3();
  RewriteSystem rs(p);
  CHECK(rs.confluent());
  CHECK(rs.rules_added() == 0);
  CHECK(rs.normal_form({0, 1}).empty());   // g · i(g)
  CHECK(rs.normal_form({0, 0, 0}).empty()); // g^3 = 1
  CHECK(rs.normal_form({0, 0}) == ArrowWord{1});
  CHECK(rs.normal_form({1, 1, 1, 1}) == ArrowWord{1});

  GroupoidWordProblem wp(p);
  for (const ArrowWord& w : {ArrowWord{0, 1}, ArrowWord{0, 0, 0}, ArrowWord{0, 0},
                             ArrowWord{1, 1, 1, 1}})
    CHECK(wp.normal_form(w) == rs.normal_form(w));
  CHECK(wp.vertex_group(0).abelianization().to_string() == "Z/3");
}

TEST_CASE("inverse rule gives the empty path", "[rewriting]") {
  auto c = complete(*presets::find("fig8"));
  const auto& p = c.presentation;
  GroupoidWordProblem wp(p);
  for (std::uint32_t x = 0; x < p.num_arrows(); ++x)
    CHECK(wp.normal_form({x, static_cast<std::uint32_t>(p.inv[x])}).empty());
}

TEST_CASE("non-composable words are rejected", "[rewriting]") {
  auto c = complete(*presets::find("trefoil"));
  const auto& p = c.presentation;
  GroupoidWordProblem wp(p);
  for (std::uint32_t x = 0; x < p.num_arrows(); ++x)
    for (std::uint32_t y = 0; y < p.num_arrows(); ++y)
      if (p.cod[x] != p.dom[y]) {
        CHECK_THROWS_AS(wp.normal_form({x, y}), ValidationError);
        CHECK_THROWS_AS(normal_form(p, {x, y}), ValidationError);
      }
  CHECK_THROWS_AS(wp.normal_form({99}), ValidationError);
}

TEST_CASE("trefoil word problem", "[rewriting]") {
  auto c = complete(*presets::find("trefoil"));
  const auto& p = c.presentation;

  // arrow-level completion and the vertex-group engine agree
  RewriteSystem rs(p);
  GroupoidWordProblem wp(p);
  CHECK(rs.confluent());
  for (const auto& e : p.products) {
    ArrowWord w{static_cast<std::uint32_t>(e.x), static_cast<std::uint32_t>(e.y)};
    CHECK(rs.normal_form(w) == ArrowWord{static_cast<std::uint32_t>(e.xy)});
    CHECK(wp.normal_form(w) == ArrowWord{static_cast<std::uint32_t>(e.xy)});
  }
  CHECK(is_saturated(p, rs));
  CHECK(is_saturated(p, wp));
  CHECK(h_composable_pairs(p, rs) == h_composable_pairs(p, wp));
  CHECK(wp.vertex_group(0).generators.size() == 1);
  CHECK(wp.vertex_group(0).relators.empty());

  // The completed trefoil is the hand-built model of H, under an explicit bijection.
  auto reference = testing::trefoil_reference();
  auto computed = delta_table(p, wp);
  REQUIRE(fingerprint(reference) == fingerprint(computed));
  auto iso = find_isomorphism(reference, computed);
  REQUIRE(iso.has_value());

  // (x, x) reduces to the single arrow representing x^2
  std::size_t x = iso->h_map[0], x2 = iso->h_map[2];
  const std::uint32_t ux = static_cast<std::uint32_t>(x);
  CHECK(wp.normal_form({ux, ux}) == ArrowWord{static_cast<std::uint32_t>(x2)});
  CHECK(rs.normal_form({ux, ux}) == ArrowWord{static_cast<std::uint32_t>(x2)});
  // (x, y) is H-composable, with product xy
  std::size_t y = iso->h_map[4], xy = iso->h_map[6];
  CHECK(computed.product(x, y) == xy);
}

TEST_CASE("figure-eight word problem", "[rewriting]") {
  auto c = complete(*presets::find("fig8"));
  const auto& p = c.presentation;
  GroupoidWordProblem wp(p);
  // every listed product reduces to one arrow, and nothing else does
  for (const auto& e : p.products)
    CHECK(wp.normal_form({static_cast<std::uint32_t>(e.x), static_cast<std::uint32_t>(e.y)}) ==
          ArrowWord{static_cast<std::uint32_t>(e.xy)});
  CHECK(h_composable_pairs(p, wp).size() == 48);
  CHECK(is_saturated(p, wp));
  // all 24 arrows stay distinct and nontrivial
  CHECK(delta_table(p, wp).size() == 24);
  CHECK(check_axioms(p, wp).passed());
  CHECK(wp.vertex_group(0).abelianization().to_string() == "Z^2");

  // The arrow-level completion of this presentation does not terminate
  // within a small cap, and says so.
  CHECK_THROWS_AS(RewriteSystem(p, 60), WordProblemUnresolved);
}

TEST_CASE("normal forms are idempotent and respect rule applications", "[rewriting]") {
  std::mt19937 rng(7);
  for (const char* name : {"trefoil", "fig8"}) {
    auto c = complete(*presets::find(name));
    const auto& p = c.presentation;
    GroupoidWordProblem wp(p);
    for (int trial = 0; trial < 200; ++trial) {
      ArrowWord w = random_path(p, 1 + trial % 7, rng);
      ArrowWord nf = wp.normal_form(w);
      CHECK(wp.normal_form(nf) == nf);
      // apply one defining relation somewhere: x y -> μ(x, y) or x i(x) -> 1
      for (std::size_t q = 0; q + 1 < w.size(); ++q) {
        ArrowWord v(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(q));
        if (auto xy = p.product(w[q], w[q + 1])) v.push_back(static_cast<std::uint32_t>(*xy));
        else if (p.inv[w[q]] != w[q + 1]) continue;
        v.insert(v.end(), w.begin() + static_cast<std::ptrdiff_t>(q) + 2, w.end());
        if (v.empty()) CHECK(nf.empty());
        else CHECK(wp.normal_form(v) == nf);
      }
    }
  }
}

TEST_CASE("completion cap fails loudly", "[rewriting]") {
  // ⟨a, b | aba = bab⟩ has no finite shortlex-complete system
  std::vector<std::pair<ArrowWord, ArrowWord>> braid{{{1, 0, 1}, {0, 1, 0}}};
  CHECK_THROWS_AS(RewriteSystem::from_equations(braid, 50), WordProblemUnresolved);
  try {
    RewriteSystem::from_equations(braid, 50);
  } catch (const WordProblemUnresolved& e) {
    CHECK(std::string(e.what()).find("50") != std::string::npos);
  }

  // ⟨a, b | ab = ba⟩ completes
  auto rs = RewriteSystem::from_equations({{{1, 0}, {0, 1}}});
  CHECK(rs.confluent());
  CHECK(rs.normal_form({1, 1, 0, 1, 0}) == ArrowWord{0, 0, 1, 1, 1});
}

TEST_CASE("Tietze simplification", "[rewriting]") {
  auto g = GroupPresentationData::parse("gen a b c\nrel a b C\nrel a b A B\n");
  auto t = tietze_simplify(g);
  CHECK(t.simplified.generators.size() == 2);
  CHECK(t.simplified.abelianization().to_string() == "Z^2");
  // kept generators map to themselves; the eliminated one to a word of
  // length two in the kept ones
  std::size_t eliminated = 0;
  for (std::size_t g0 = 0; g0 < 3; ++g0) {
    auto it = std::find(t.kept.begin(), t.kept.end(), g0);
    if (it != t.kept.end()) {
      CHECK(t.image[g0] == GroupWord{{static_cast<std::size_t>(it - t.kept.begin()), false}});
    } else {
      eliminated = g0;
      CHECK(t.image[g0].size() == 2);
    }
  }
  CHECK(t.image[eliminated].size() == 2);

  auto tref = GroupPresentationData::parse("gen a b\nrel a a B B B\n");
  auto tt = tietze_simplify(tref);
  CHECK(tt.simplified.generators.size() == 2);
  CHECK(tt.simplified.relators.size() == 1);
}
