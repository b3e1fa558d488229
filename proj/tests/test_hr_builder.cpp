#include <doctest.h>

#include "hradon/hr_builder.hpp"

using namespace hradon;

TEST_CASE("base witnesses") {
  HRFamily so11 = base_witness(ClassicalAlgebra::signature(Family::SO, 1, 1));
  REQUIRE(so11.matrices.size() == 1);
  ExactMatrix expect(Field::Real, 2, 2);
  expect.at(0, 1) = Quaternion::one();
  expect.at(1, 0) = Quaternion::one();
  CHECK(so11.matrices[0] == expect);
  CHECK(verify_family(so11).pass);

  HRFamily gl3 = base_witness(ClassicalAlgebra::sized(Family::GL_C, 3));
  REQUIRE(gl3.matrices.size() == 1);
  CHECK(gl3.matrices[0] == ExactMatrix::identity(Field::Complex, 3));

  HRFamily so33 = base_witness(ClassicalAlgebra::signature(Family::SO, 3, 3));
  CHECK(so33.matrices.size() == 1);
  CHECK(verify_family(so33).pass);

  CHECK_THROWS_AS(base_witness(ClassicalAlgebra::signature(Family::SO, 2, 2)),
                  not_a_base);
}

TEST_CASE("every ladder row certifies at minimal size") {
  for (int id = 1; id <= 10; ++id) {
    const LadderRow& row = ladder_row(id);
    for (std::size_t n : {std::size_t(1), std::size_t(2)}) {
      ClassicalAlgebra src = row.source(n);
      ClassicalAlgebra tgt = row.target(n);
      ExactMatrix z = row.z_image(n);
      // Z^2 = I and Z in the symmetric part of the target.
      CHECK(z * z == ExactMatrix::identity(z.field(), z.rows()));
      CHECK(p_part_contains(tgt, z));
      // Z anticommutes with the whole embedded source p-part, which itself
      // lands inside the target p-part.
      for (const auto& b : p_part_basis(src)) {
        ExactMatrix e = row.embed(n, b);
        CHECK(p_part_contains(tgt, e));
        CHECK(anticommutator(z, e).is_zero());
      }
    }
  }
}

TEST_CASE("single ladder step from so(1,1)") {
  HRFamily base = base_witness(ClassicalAlgebra::signature(Family::SO, 1, 1));
  HRFamily up = ladder_step(base, ladder_row(1), 1);
  CHECK(up.alg == ClassicalAlgebra::sized(Family::SL_R, 2));
  REQUIRE(up.matrices.size() == 2);
  CHECK(verify_family(up).pass);
  CHECK(up.matrices[1] == ExactMatrix::ipq(Field::Real, 1, 1));
}

TEST_CASE("row mismatch is rejected") {
  HRFamily base = base_witness(ClassicalAlgebra::signature(Family::SO, 1, 1));
  CHECK_THROWS_AS(ladder_step(base, ladder_row(2), 1), row_mismatch);
}

TEST_CASE("eight steps from so(1,1) land in so(16,16) with 9 elements") {
  HRFamily fam = build_witness(ClassicalAlgebra::signature(Family::SO, 16, 16));
  CHECK(fam.matrices.size() == 9);
  CHECK(verify_family(fam).pass);
}

TEST_CASE("reference witnesses") {
  HRFamily so44 = build_witness(ClassicalAlgebra::signature(Family::SO, 4, 4));
  CHECK(so44.matrices.size() == 4);
  CHECK(so44.matrices[0].rows() == 8);
  CHECK(verify_family(so44).pass);

  HRFamily su22 = build_witness(ClassicalAlgebra::signature(Family::SU, 2, 2));
  CHECK(su22.matrices.size() == 4);
  CHECK(su22.matrices[0].rows() == 4);
  CHECK(su22.matrices[0].field() == Field::Complex);
  CHECK(verify_family(su22).pass);

  HRFamily su21 = build_witness(ClassicalAlgebra::signature(Family::SU, 2, 1));
  CHECK(su21.matrices.empty());
  CHECK(!su21.note.empty());
}

TEST_CASE("sl targets get traceless families of the right size") {
  for (std::size_t m : {std::size_t(1), std::size_t(2), std::size_t(3)}) {
    HRFamily f = build_witness(ClassicalAlgebra::sized(Family::SL_R, 2 * m));
    CHECK(f.matrices.size() ==
          std::size_t(rho_variant(ClassicalAlgebra::sized(Family::SL_R, 2 * m), 1)));
    CHECK(verify_family(f).pass);
    for (const auto& mat : f.matrices) CHECK(mat.trace().is_zero());
  }
  HRFamily fh = build_witness(ClassicalAlgebra::sized(Family::SL_H, 2));
  CHECK(fh.matrices.size() ==
        std::size_t(rho_variant(ClassicalAlgebra::sized(Family::SL_H, 2), 1)));
  CHECK(verify_family(fh).pass);
  HRFamily fc = build_witness(ClassicalAlgebra::sized(Family::SL_C, 4));
  CHECK(fc.matrices.size() ==
        std::size_t(rho_variant(ClassicalAlgebra::sized(Family::SL_C, 4), 1)));
  CHECK(verify_family(fc).pass);
}

TEST_CASE("verify_family flags bad families") {
  ClassicalAlgebra gl2 = ClassicalAlgebra::sized(Family::GL_R, 2);
  ExactMatrix id = ExactMatrix::identity(Field::Real, 2);
  HRFamily twice{gl2, {id, id}, ""};
  CHECK(!verify_family(twice).pass);

  // Traceless symmetric with square not a scalar.
  ExactMatrix bad(Field::Real, 2, 2);
  bad.at(0, 0) = Quaternion(Rational(2));
  bad.at(1, 1) = Quaternion(Rational(-2));
  HRFamily nonsq{ClassicalAlgebra::sized(Family::SL_R, 2), {bad}, ""};
  CHECK(!verify_family(nonsq).pass);
}

TEST_CASE("iterated ladder size equals the closed formula, all bases") {
  // Walk both chains upward from every terminal with odd seed 1 or 3 while
  // the standard representation stays within complex dimension 64.
  for (std::size_t m : {std::size_t(1), std::size_t(3)}) {
    for (int slot0 : {2, 6, 7, 8}) {
      int slot = slot0;
      std::size_t n = m;
      while (chain_algebra(slot, n).complex_dim() <= 64) {
        ClassicalAlgebra g = chain_algebra(slot, n);
        HRFamily fam = build_witness(g);
        CHECK(fam.matrices.size() == std::size_t(rho_variant(g, 1)));
        CHECK(verify_family(fam).pass);
        n *= chain_coefficient_a(slot);
        slot = slot % 8 + 1;
      }
    }
    std::size_t n = m;
    bool su_side = false;
    while ((su_side ? ClassicalAlgebra::signature(Family::SU, n, n)
                    : ClassicalAlgebra::sized(Family::GL_C, n))
               .complex_dim() <= 64) {
      ClassicalAlgebra g = su_side
                               ? ClassicalAlgebra::signature(Family::SU, n, n)
                               : ClassicalAlgebra::sized(Family::GL_C, n);
      HRFamily fam = build_witness(g);
      CHECK(fam.matrices.size() == std::size_t(rho_variant(g, 1)));
      CHECK(verify_family(fam).pass);
      if (su_side) n *= 2;
      su_side = !su_side;
    }
  }
}

TEST_CASE("sl odd invertibility witness") {
  ClassicalAlgebra sl3 = ClassicalAlgebra::sized(Family::SL_R, 3);
  ExactMatrix w = sl_odd_invertible_witness(sl3);
  CHECK(p_part_contains(sl3, w));
  // Invertible: diagonal entries nonzero.
  for (std::size_t i = 0; i < 3; ++i) CHECK(!w.at(i, i).is_zero());
  CHECK_THROWS_AS(
      sl_odd_invertible_witness(ClassicalAlgebra::sized(Family::SL_R, 4)),
      unsupported_family);
}
