#include <doctest.h>

#include <random>

#include "hradon/json_io.hpp"
#include "hradon/matrix.hpp"

using namespace hradon;

namespace {

ExactMatrix random_h_matrix(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-3, 3);
  ExactMatrix m(Field::Quaternion, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      m.at(r, c) = Quaternion(Rational(d(rng)), Rational(d(rng)),
                              Rational(d(rng)), Rational(d(rng)));
  return m;
}

}  // namespace

TEST_CASE("identity and involution products") {
  ExactMatrix i2 = ExactMatrix::identity(Field::Real, 2);
  CHECK(i2 * i2 == i2);
  ExactMatrix s(Field::Real, 2, 2);
  s.at(0, 1) = Quaternion::one();
  s.at(1, 0) = Quaternion::one();
  CHECK(s * s == i2);
}

TEST_CASE("quaternion scalar matrices multiply by the table") {
  ExactMatrix qi = ExactMatrix::scalar(Field::Quaternion, 1, Quaternion::i());
  ExactMatrix qj = ExactMatrix::scalar(Field::Quaternion, 1, Quaternion::j());
  ExactMatrix qk = ExactMatrix::scalar(Field::Quaternion, 1, Quaternion::k());
  CHECK(qi * qj == qk);
  CHECK(qj * qi == -qk);
}

TEST_CASE("conj_transpose basics") {
  ExactMatrix qi = ExactMatrix::scalar(Field::Quaternion, 1, Quaternion::i());
  CHECK(qi.conj_transpose() == -qi);
  ExactMatrix ipq = ExactMatrix::ipq(Field::Real, 2, 1);
  CHECK(ipq.conj_transpose() == ipq);
  ExactMatrix j4 = ExactMatrix::j_form(Field::Real, 4);
  CHECK(j4.conj_transpose() == -j4);
}

TEST_CASE("conj_transpose is an anti-involution") {
  std::mt19937 rng(7);
  for (int t = 0; t < 25; ++t) {
    ExactMatrix a = random_h_matrix(rng, 2);
    ExactMatrix b = random_h_matrix(rng, 2);
    CHECK(a.conj_transpose().conj_transpose() == a);
    CHECK((a * b).conj_transpose() ==
          b.conj_transpose() * a.conj_transpose());
  }
}

TEST_CASE("complexify of j follows the fixed block convention") {
  ExactMatrix qj = ExactMatrix::scalar(Field::Quaternion, 1, Quaternion::j());
  ExactMatrix c = qj.complexify();
  ExactMatrix expected(Field::Complex, 2, 2);
  expected.at(0, 1) = -Quaternion::one();
  expected.at(1, 0) = Quaternion::one();
  CHECK(c == expected);

  ExactMatrix idr = ExactMatrix::identity(Field::Real, 3);
  CHECK(idr.complexify() == ExactMatrix::identity(Field::Complex, 3));
}

TEST_CASE("complexify is an algebra homomorphism on random pairs") {
  std::mt19937 rng(11);
  for (int t = 0; t < 30; ++t) {
    ExactMatrix a = random_h_matrix(rng, 2);
    ExactMatrix b = random_h_matrix(rng, 2);
    CHECK((a * b).complexify() == a.complexify() * b.complexify());
    CHECK((a + b).complexify() == a.complexify() + b.complexify());
    CHECK(a.conj_transpose().complexify() == a.complexify().conj_transpose());
  }
}

TEST_CASE("complexify is injective on a basis of M(2,H)") {
  // All 16 basis matrices E_{rc} * unit map to distinct nonzero images.
  std::vector<ExactMatrix> images;
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c)
      for (const auto& u : {Quaternion::one(), Quaternion::i(), Quaternion::j(),
                            Quaternion::k()}) {
        ExactMatrix m(Field::Quaternion, 2, 2);
        m.set(r, c, u);
        images.push_back(m.complexify());
      }
  for (std::size_t i = 0; i < images.size(); ++i) {
    CHECK(!images[i].is_zero());
    for (std::size_t j = i + 1; j < images.size(); ++j)
      CHECK(images[i] != images[j]);
  }
}

TEST_CASE("field mismatch and shape mismatch are rejected") {
  ExactMatrix r = ExactMatrix::identity(Field::Real, 2);
  ExactMatrix c = ExactMatrix::identity(Field::Complex, 2);
  CHECK_THROWS_AS(r * c, field_mismatch);
  ExactMatrix wide(Field::Real, 2, 3);
  CHECK_THROWS_AS(wide * wide, dimension_mismatch);
  ExactMatrix rr(Field::Real, 1, 1);
  CHECK_THROWS_AS(rr.set(0, 0, Quaternion::i()), field_mismatch);
}

TEST_CASE("json round trip across all fields") {
  std::mt19937 rng(3);
  ExactMatrix h = random_h_matrix(rng, 2);
  CHECK(matrix_from_json(matrix_to_json(h)) == h);
  ExactMatrix c(Field::Complex, 1, 2);
  c.set(0, 0, Quaternion(Rational(1, 2), Rational(-3)));
  c.set(0, 1, Quaternion(Rational(0), Rational(7, 5)));
  CHECK(matrix_from_json(matrix_to_json(c)) == c);
  ExactMatrix r = ExactMatrix::ipq(Field::Real, 1, 2);
  json j = matrix_to_json(r);
  CHECK(j["field"] == "R");
  CHECK(matrix_from_json(j) == r);
}
