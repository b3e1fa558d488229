#include <doctest.h>

#include <random>

#include "hradon/hurwitz_radon.hpp"

using namespace hradon;

TEST_CASE("rho on the reference arguments") {
  CHECK(rho(Rational(1, 16)) == -7);
  CHECK(rho(Rational(1, 8)) == -6);
  CHECK(rho(Rational(1, 4)) == -4);
  CHECK(rho(Rational(1, 2)) == 0);
  CHECK(rho(Rational(1)) == 1);
  CHECK(rho(Rational(2)) == 2);
  CHECK(rho(Rational(4)) == 4);
  CHECK(rho(Rational(8)) == 8);
  CHECK(rho(Rational(16)) == 9);
  CHECK(rho(Rational(12)) == 4);
}

TEST_CASE("ord2 and the decomposition reconstruct the input") {
  CHECK(ord2(Rational(12)) == 2);
  CHECK(ord2(Rational(3, 2)) == -1);
  CHECK(ord2(Rational(1)) == 0);
  auto d = hurwitz_decompose(Rational(48));
  CHECK(4 * d.a + d.b == 4);
  CHECK(d.odd_part == Rational(3));
}

TEST_CASE("rho(16t) = rho(t) + 8 on random rationals") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> num(1, 4000), den(1, 4000);
  for (int t = 0; t < 100; ++t) {
    Rational r(num(rng), den(rng));
    CHECK(rho(Rational(16) * r) == rho(r) + 8);
  }
}

TEST_CASE("rho on odd multiples") {
  for (int m = 1; m <= 31; m += 2) {
    CHECK(rho(Rational(m)) == 1);
    CHECK(rho(Rational(2 * m)) == 2);
    CHECK(rho(Rational(4 * m)) == 4);
    CHECK(rho(Rational(8 * m)) == 8);
  }
}

TEST_CASE("rho_variant reference values") {
  CHECK(rho_variant(ClassicalAlgebra::signature(Family::SO, 4, 4), 1) == 4);
  CHECK(rho_variant(ClassicalAlgebra::signature(Family::SU, 2, 2), 2) == 4);
  CHECK(rho_variant(ClassicalAlgebra::sized(Family::SL_R, 3), 1) == 0);
  CHECK(rho_variant(ClassicalAlgebra::sized(Family::SL_R, 3), 2) == 1);
  CHECK(rho_variant(ClassicalAlgebra::signature(Family::SU, 2, 1), 1) == 0);
  CHECK(rho_variant(ClassicalAlgebra::sized(Family::SL_H, 1), 2) == 0);
  CHECK(rho_variant(ClassicalAlgebra::sized(Family::SO_STAR, 8), 1) == 7);
  CHECK(rho_variant(ClassicalAlgebra::sized(Family::SP_R, 2), 1) == 3);
  CHECK(rho_variant(ClassicalAlgebra::sized(Family::GL_C, 1), 1) == 1);
}

TEST_CASE("chain table") {
  CHECK(chain_algebra(1, 3) == ClassicalAlgebra::signature(Family::SO, 3, 3));
  CHECK(chain_algebra(6, 5) == ClassicalAlgebra::sized(Family::GL_H, 5));
  CHECK(chain_coefficient_b(7) == 8);
  CHECK(chain_coefficient_a(1) == 2);
  CHECK(chain_coefficient_a(8) == 1);
  // b recurrence within one period.
  for (int i = 1; i < 8; ++i)
    CHECK(chain_coefficient_b(i + 1) ==
          chain_coefficient_a(i) * chain_coefficient_b(i));
}

TEST_CASE("ladder equality along the chain") {
  for (int i = 1; i <= 8; ++i) {
    for (std::size_t n = 1; n <= 64; ++n) {
      int a = chain_coefficient_a(i);
      ClassicalAlgebra lo = chain_algebra(i, n);
      ClassicalAlgebra hi = chain_algebra(i + 1, a * n);
      CHECK(rho_variant(hi, 1) == rho_variant(lo, 1) + 1);
    }
  }
}

TEST_CASE("rho_via_chain equals rho_variant where both are defined") {
  for (int i = 1; i <= 8; ++i)
    for (std::size_t n = 1; n <= 64; ++n) {
      ClassicalAlgebra g = chain_algebra(i, n);
      CHECK(rho_via_chain(g) == rho_variant(g, 1));
    }
  for (std::size_t n = 1; n <= 32; ++n) {
    ClassicalAlgebra glc = ClassicalAlgebra::sized(Family::GL_C, n);
    ClassicalAlgebra su = ClassicalAlgebra::signature(Family::SU, n, n);
    CHECK(rho_via_chain(glc) == rho_variant(glc, 1));
    CHECK(rho_via_chain(su) == rho_variant(su, 1));
  }
  CHECK_THROWS_AS(rho_via_chain(ClassicalAlgebra::sized(Family::SL_R, 4)),
                  not_on_chain);
}

TEST_CASE("variant 1 never exceeds variant 2") {
  std::vector<ClassicalAlgebra> gs;
  for (std::size_t n = 1; n <= 12; ++n) {
    gs.push_back(ClassicalAlgebra::sized(Family::SL_R, n));
    gs.push_back(ClassicalAlgebra::sized(Family::SL_C, n));
    gs.push_back(ClassicalAlgebra::sized(Family::SL_H, n));
    gs.push_back(ClassicalAlgebra::sized(Family::GL_R, n));
    gs.push_back(ClassicalAlgebra::sized(Family::GL_C, n));
    gs.push_back(ClassicalAlgebra::sized(Family::GL_H, n));
    gs.push_back(ClassicalAlgebra::sized(Family::SP_R, n));
    gs.push_back(ClassicalAlgebra::sized(Family::SP_C, n));
    gs.push_back(ClassicalAlgebra::sized(Family::SO_C, n));
    gs.push_back(ClassicalAlgebra::sized(Family::SO_STAR, n));
    for (std::size_t p = 0; p <= n; ++p) {
      if (p + (n - p) == 0) continue;
      gs.push_back(ClassicalAlgebra::signature(Family::SO, p, n - p));
      gs.push_back(ClassicalAlgebra::signature(Family::SU, p, n - p));
      gs.push_back(ClassicalAlgebra::signature(Family::SP, p, n - p));
    }
  }
  for (const auto& g : gs) CHECK(rho_variant(g, 1) <= rho_variant(g, 2));
}

TEST_CASE("degenerate descriptors accepted but flagged non-simple") {
  ClassicalAlgebra so11 = ClassicalAlgebra::signature(Family::SO, 1, 1);
  ClassicalAlgebra so22 = ClassicalAlgebra::signature(Family::SO, 2, 2);
  ClassicalAlgebra sostar4 = ClassicalAlgebra::sized(Family::SO_STAR, 2);
  CHECK(rho_variant(so11, 1) == 1);
  CHECK(rho_variant(so22, 1) == 2);
  CHECK_FALSE(so11.is_simple());
  CHECK_FALSE(so22.is_simple());
  CHECK_FALSE(sostar4.is_simple());
  CHECK(ClassicalAlgebra::signature(Family::SO, 3, 3).is_simple());
}

TEST_CASE("descriptor parsing") {
  auto g = parse_algebra("so 4 4");
  REQUIRE(g.has_value());
  CHECK(*g == ClassicalAlgebra::signature(Family::SO, 4, 4));
  auto s = parse_algebra("so-star 16");
  REQUIRE(s.has_value());
  CHECK(*s == ClassicalAlgebra::sized(Family::SO_STAR, 8));
  CHECK(!parse_algebra("so-star 7").has_value());
  CHECK(!parse_algebra("nonsense 3").has_value());
}
