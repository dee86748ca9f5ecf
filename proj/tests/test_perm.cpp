#include <catch_amalgamated.hpp>

#include <random>

#include "dgw/perm.hpp"

using dgw::Perm;

namespace {

// Independent description of delta_i(g): remove the point g^{-1}(i) from the
// domain and the point i from the range, then renumber both order-preservingly.
Perm delta_by_deletion(std::size_t i, const Perm& g) {
  std::size_t n = std::max(g.degree(), i + 1);
  std::size_t removed = g.inverse()(i);
  std::vector<std::size_t> im;
  for (std::size_t x = 0; x < n; ++x) {
    if (x == removed) continue;
    std::size_t y = g(x);
    im.push_back(y > i ? y - 1 : y);
  }
  return Perm(im);
}

}  // namespace

TEST_CASE("composition convention is right-to-left", "[perm]") {
  Perm s01 = Perm::cycle({0, 1});
  Perm s12 = Perm::cycle({1, 2});
  // h acts first: (g*h)(x) = g(h(x)).
  CHECK(dgw::compose(s01, s12) == Perm::cycle({0, 1, 2}));
  CHECK(dgw::compose(s12, s01) == Perm::cycle({0, 2, 1}));
  CHECK((s12 * s01)(0) == s12(s01(0)));
  CHECK(dgw::compose(Perm::transposition(1), Perm::transposition(1)) == Perm());
  Perm g = Perm::parse("(0 3)(1 2)");
  CHECK(dgw::compose(g, Perm()) == g);
  CHECK(dgw::compose(Perm(), g) == g);
}

TEST_CASE("composition is associative on S4", "[perm]") {
  auto s4 = Perm::all(4);
  for (const auto& a : s4)
    for (const auto& b : s4)
      for (const auto& c : s4) REQUIRE((a * b) * c == a * (b * c));
}

TEST_CASE("transpositions", "[perm]") {
  Perm s1 = Perm::transposition(1);
  CHECK(s1(0) == 1);
  CHECK(s1(1) == 0);
  CHECK(s1(2) == 2);
  CHECK(Perm::transposition(3) * Perm::transposition(3) == Perm());
  CHECK(Perm::transposition(2)(0) == 0);
  CHECK_THROWS_AS(Perm::transposition(0), dgw::ValidationError);
}

TEST_CASE("trailing fixed points do not matter", "[perm]") {
  CHECK(Perm({1, 0, 2, 3}) == Perm({1, 0}));
  CHECK(Perm({0, 1, 2}) == Perm());
  CHECK(Perm({1, 0, 2}).degree() == 2);
  CHECK_THROWS_AS(Perm({0, 0}), dgw::ValidationError);
}

TEST_CASE("cycle notation round-trips", "[perm]") {
  for (const auto& g : Perm::all(5)) {
    REQUIRE(Perm::parse(g.to_string()) == g);
  }
  CHECK(Perm().to_string() == "e");
  CHECK(Perm::cycle({0, 1, 2}).to_string() == "(0 1 2)");
  CHECK(Perm::parse("(3 2 1)") == Perm({0, 3, 1, 2}));
  CHECK_THROWS_AS(Perm::parse("(0 1"), dgw::ValidationError);
  CHECK_THROWS_AS(Perm::parse("(0 0)"), dgw::ValidationError);
}

TEST_CASE("reduced words multiply out and have inversion length", "[perm]") {
  for (const auto& g : Perm::all(5)) {
    auto w1 = dgw::reduced_word(g);
    auto w2 = dgw::reduced_word_left(g);
    REQUIRE(dgw::from_word(w1) == g);
    REQUIRE(dgw::from_word(w2) == g);
    std::size_t inv = 0;
    auto im = g.images(5);
    for (std::size_t a = 0; a < 5; ++a)
      for (std::size_t b = a + 1; b < 5; ++b) inv += im[a] > im[b];
    REQUIRE(w1.size() == inv);
    REQUIRE(w2.size() == inv);
  }
}

TEST_CASE("delta on generators", "[perm]") {
  Perm s1 = Perm::transposition(1);
  Perm s2 = Perm::transposition(2);
  CHECK(dgw::delta(0, s1) == Perm());
  CHECK(dgw::delta(0, s2) == s1);
  CHECK(dgw::delta(3, s1) == s1);
  CHECK(dgw::delta(1, s1) == Perm());
  CHECK(dgw::delta(2, Perm()) == Perm());
}

TEST_CASE("delta agrees with the deletion description on S4", "[perm]") {
  for (const auto& g : Perm::all(4)) {
    for (std::size_t i = 0; i <= 3; ++i) {
      INFO("g = " << g.to_string() << ", i = " << i);
      REQUIRE(dgw::delta(i, g) == delta_by_deletion(i, g));
    }
  }
}

TEST_CASE("delta is independent of the chosen word", "[perm]") {
  std::mt19937 rng(7);
  for (const auto& g : Perm::all(4)) {
    auto w1 = dgw::reduced_word(g);
    auto w2 = dgw::reduced_word_left(g);
    // a non-reduced word for the same element: insert s_k s_k somewhere
    std::vector<std::size_t> w3 = w1;
    std::size_t k = 1 + rng() % 3;
    w3.insert(w3.begin() + static_cast<long>(rng() % (w3.size() + 1)), {k, k});
    for (std::size_t i = 0; i <= 4; ++i) {
      Perm d = dgw::delta_along(i, w1);
      REQUIRE(dgw::delta_along(i, w2) == d);
      REQUIRE(dgw::delta_along(i, w3) == d);
    }
  }
}

TEST_CASE("delta satisfies the product rule on S4 x S4", "[perm]") {
  auto s4 = Perm::all(4);
  for (const auto& g : s4)
    for (const auto& h : s4)
      for (std::size_t i = 0; i <= 4; ++i) {
        REQUIRE(dgw::delta(i, g * h) ==
                dgw::delta(i, g) * dgw::delta(g.inverse()(i), h));
      }
}

TEST_CASE("delta_i maps S_{n+1} into S_n for 0 <= i <= n", "[perm]") {
  for (std::size_t n = 0; n <= 5; ++n) {
    for (const auto& g : Perm::all(n + 1)) {
      for (std::size_t i = 0; i <= n; ++i) {
        REQUIRE(dgw::delta(i, g).degree() <= n);
      }
    }
  }
  // With the same index range on S_n itself the inclusion fails:
  // delta_2(s_1) = s_1 is not in S_1.
  CHECK(dgw::delta(2, Perm::transposition(1)) == Perm::transposition(1));
}

TEST_CASE("sign is a homomorphism", "[perm]") {
  auto s4 = Perm::all(4);
  for (const auto& g : s4)
    for (const auto& h : s4) REQUIRE((g * h).sign() == g.sign() * h.sign());
  CHECK(Perm::transposition(2).sign() == -1);
}
