#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "dgw/zlin.hpp"

using dgw::IntMatrix;
using dgw::IntVector;
using dgw::Integer;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c,
                        int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

IntMatrix diag(const std::vector<Integer>& d, std::size_t r, std::size_t c) {
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

// Order of Z^n / (colspan(m) + 5 Z^n) counted by enumerating the span of m in
// (Z/5)^n.
std::size_t brute_quotient_order_mod5(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::set<std::vector<int>> span{std::vector<int>(n, 0)};
  bool grew = true;
  while (grew) {
    grew = false;
    std::set<std::vector<int>> next = span;
    for (const auto& v : span) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        std::vector<int> w = v;
        for (std::size_t r = 0; r < n; ++r) {
          long x = mpz_fdiv_ui(m(r, c).get_mpz_t(), 5);
          w[r] = static_cast<int>((w[r] + x) % 5);
        }
        if (next.insert(w).second) grew = true;
      }
    }
    span = std::move(next);
  }
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 5;
  return total / span.size();
}

}  // namespace

TEST_CASE("snf of a small matrix", "[zlin]") {
  IntMatrix m{{2, 4}, {6, 8}};
  auto s = dgw::snf(m);
  CHECK(s.diagonal == std::vector<Integer>{2, 4});
  CHECK(s.u * m * s.v == diag(s.diagonal, 2, 2));
  CHECK(dgw::is_unimodular(s.u));
  CHECK(dgw::is_unimodular(s.v));
  CHECK(s.u * s.u_inv == IntMatrix::identity(2));
}

TEST_CASE("snf certificates on random matrices", "[zlin]") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
    IntMatrix m = random_matrix(rng, r, c, -6, 6);
    if (trial % 5 == 0) {
      // force rank deficiency
      for (std::size_t i = 0; i < r; ++i) m(i, c - 1) = 2 * m(i, 0);
    }
    auto s = dgw::snf(m);
    REQUIRE(dgw::is_unimodular(s.u));
    REQUIRE(dgw::is_unimodular(s.v));
    REQUIRE(s.u * s.u_inv == IntMatrix::identity(r));
    REQUIRE(s.u * m * s.v == diag(s.diagonal, r, c));
    for (std::size_t i = 0; i + 1 < s.rank; ++i) {
      REQUIRE(s.diagonal[i] > 0);
      REQUIRE(mpz_divisible_p(s.diagonal[i + 1].get_mpz_t(),
                              s.diagonal[i].get_mpz_t()));
    }
    auto s2 = dgw::snf(m, false);
    REQUIRE(s2.diagonal == s.diagonal);
  }
}

TEST_CASE("hnf spans the same lattice and is canonical", "[zlin]") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 6;
    IntMatrix m = random_matrix(rng, r, c, -9, 9);
    IntMatrix h = dgw::hnf(m);
    for (std::size_t j = 0; j < m.cols(); ++j)
      REQUIRE(dgw::in_span(h, m.column(j)));
    for (std::size_t j = 0; j < h.cols(); ++j)
      REQUIRE(dgw::in_span(m, h.column(j)));
    // a unimodular change of generators gives the same HNF
    IntMatrix u = IntMatrix::identity(c);
    for (std::size_t k = 0; k + 1 < c; ++k) u(k, k + 1) = static_cast<long>(rng() % 5);
    REQUIRE(dgw::hnf(m * u) == h);
  }
}

TEST_CASE("kernel", "[zlin]") {
  IntMatrix m{{1, 1}};
  IntMatrix k = dgw::kernel(m);
  REQUIRE(k.cols() == 1);
  CHECK(((k(0, 0) == 1 && k(1, 0) == -1) || (k(0, 0) == -1 && k(1, 0) == 1)));

  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    IntMatrix a = random_matrix(rng, 3, 6, -4, 4);
    IntMatrix kk = dgw::kernel(a);
    REQUIRE((a * kk).is_zero());
    auto s = dgw::snf(a, false);
    REQUIRE(kk.cols() == 6 - s.rank);
    // primitive: the kernel lattice is saturated
    REQUIRE(dgw::quotient_invariants(IntMatrix::identity(6), kk).torsion.empty());
  }
}

TEST_CASE("quotient invariants", "[zlin]") {
  auto f = dgw::quotient_invariants(IntMatrix::identity(2), IntMatrix{{2, 0}, {0, 1}});
  CHECK(f.torsion == std::vector<Integer>{2});
  CHECK(f.free_rank == 0);
  IntMatrix a{{1, 2}, {3, 4}, {5, 6}};
  CHECK(dgw::quotient_invariants(a, a).is_trivial());
  CHECK(dgw::quotient_invariants(IntMatrix::identity(3), IntMatrix(3, 0)).free_rank == 3);
  CHECK_THROWS_AS(dgw::quotient_invariants(IntMatrix{{2}}, IntMatrix{{1}}),
                  dgw::ValidationError);
  CHECK(dgw::InvariantFactors{{2, 6}, 1}.to_string() == "Z + Z/2 + Z/6");
}

TEST_CASE("quotient orders agree with enumeration mod 5", "[zlin]") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    IntMatrix m = random_matrix(rng, 5, 5, -3, 3);
    // Z^5 / (colspan(m) + 5 Z^5) has order prod gcd(d_i, 5) over the SNF.
    IntMatrix sub = m.hcat(IntMatrix::identity(5) * IntMatrix{{5, 0, 0, 0, 0},
                                                              {0, 5, 0, 0, 0},
                                                              {0, 0, 5, 0, 0},
                                                              {0, 0, 0, 5, 0},
                                                              {0, 0, 0, 0, 5}});
    auto f = dgw::quotient_invariants(IntMatrix::identity(5), sub);
    REQUIRE(f.free_rank == 0);
    std::size_t order = 1;
    for (const auto& d : f.torsion) order *= d.get_ui();
    REQUIRE(order == brute_quotient_order_mod5(m));
  }
}

TEST_CASE("preimage lattice", "[zlin]") {
  // m = [2 0; 0 3], sub = span{(1,0)} -> preimage = {v : 3 v_2 = 0} = span{(1,0)}
  IntMatrix m{{2, 0}, {0, 3}};
  IntMatrix sub{{1}, {0}};
  IntMatrix p = dgw::preimage_lattice(m, sub);
  REQUIRE(p.cols() == 1);
  CHECK(p(0, 0) == 1);
  CHECK(p(1, 0) == 0);
  // sub = span{(2, 3)} -> v with (2a, 3b) in span{(2,3)}: a = b
  IntMatrix p2 = dgw::preimage_lattice(m, IntMatrix{{2}, {3}});
  REQUIRE(p2.cols() == 1);
  CHECK(abs(p2(0, 0)) == 1);
  CHECK(p2(0, 0) == p2(1, 0));

  std::mt19937 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    IntMatrix a = random_matrix(rng, 4, 5, -3, 3);
    IntMatrix s = random_matrix(rng, 4, 2, -3, 3);
    IntMatrix pre = dgw::preimage_lattice(a, s);
    IntMatrix img = a * pre;
    for (std::size_t j = 0; j < img.cols(); ++j)
      REQUIRE(dgw::in_span(s, img.column(j)));
    // the kernel is contained in the preimage
    IntMatrix k = dgw::kernel(a);
    for (std::size_t j = 0; j < k.cols(); ++j)
      REQUIRE(dgw::in_span(pre, k.column(j)));
  }
}

TEST_CASE("solve and determinant", "[zlin]") {
  IntMatrix m{{2, 0}, {0, 3}};
  auto z = dgw::solve(m, IntVector{4, 9});
  REQUIRE(z);
  CHECK((*z)[0] == 2);
  CHECK((*z)[1] == 3);
  CHECK_FALSE(dgw::solve(m, IntVector{1, 0}));
  CHECK(dgw::determinant(IntMatrix{{1, 2}, {3, 4}}) == -2);
  CHECK(dgw::determinant(IntMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}) == -1);
  CHECK(dgw::cokernel_invariants(IntMatrix{{2, 0}, {0, 0}}).to_string() == "Z + Z/2");
}

TEST_CASE("arbitrary precision survives pivot growth", "[zlin]") {
  std::mt19937 rng(29);
  IntMatrix m = random_matrix(rng, 30, 30, -50, 50);
  auto s = dgw::snf(m);
  REQUIRE(s.u * m * s.v == diag(s.diagonal, 30, 30));
  Integer prod = 1;
  for (const auto& d : s.diagonal) prod *= d;
  REQUIRE(abs(dgw::determinant(m)) == prod);
}
