#include <doctest.h>

#include <map>

#include "hradon/sl2_orbits.hpp"

using namespace hradon;

namespace {

// Independent oracle: decompose the tensor product of the k- and l-dim
// irreducibles from the weight multiset.
std::vector<int> tensor_decompose_oracle(int k, int l) {
  std::map<int, long> weights;
  for (int a = k - 1; a >= -(k - 1); a -= 2)
    for (int b = l - 1; b >= -(l - 1); b -= 2) ++weights[a + b];
  std::vector<int> out;
  while (true) {
    int top = INT32_MIN;
    for (const auto& [w, c] : weights)
      if (c > 0 && w > top) top = w;
    if (top == INT32_MIN) break;
    out.push_back(top + 1);
    for (int w = top; w >= -top; w -= 2) {
      if (--weights[w] < 0) throw std::logic_error("bad weight multiset");
    }
  }
  return out;
}

}  // namespace

TEST_CASE("partition parsing and forms") {
  Partition p = Partition::parse("3^2,1^2");
  CHECK(p.parts() == std::vector<int>{3, 3, 1, 1});
  CHECK(p.to_string() == "[3^2,1^2]");
  CHECK(Partition::parse("7,1").sum() == 8);
  CHECK_THROWS_AS(Partition({1, 3}), invalid_partition);
}

TEST_CASE("validity rules") {
  auto so7 = ComplexSimpleType::so(7);
  CHECK(partition_valid_for(so7, Partition::parse("3,3,1")));
  CHECK(!partition_valid_for(so7, Partition::parse("2,2,2,1")));
  auto sp2 = ComplexSimpleType::sp_half(2);
  CHECK(partition_valid_for(sp2, Partition::parse("4")));
  CHECK(!partition_valid_for(sp2, Partition::parse("3,1")));
  auto so8 = ComplexSimpleType::so(8);
  auto vp = valid_partitions(so8);
  bool found44 = false;
  for (const auto& [p, orbits] : vp)
    if (p == Partition::parse("4,4")) {
      found44 = true;
      CHECK(orbits == 2);
    }
  CHECK(found44);
  CHECK_THROWS_AS(valid_partitions(ComplexSimpleType::so(4)), non_simple_type);
}

TEST_CASE("eigenvalues") {
  CHECK(eigenvalues(Partition::parse("2")) == std::vector<int>{1, -1});
  CHECK(eigenvalues(Partition::parse("7,1")) ==
        std::vector<int>{6, 4, 2, 0, 0, -2, -4, -6});
  CHECK(eigenvalues(Partition::parse("4,2")) ==
        std::vector<int>{3, 1, 1, -1, -1, -3});
}

TEST_CASE("weighted diagrams per type") {
  auto d1 = weighted_diagram(ComplexSimpleType::so(8), Partition::parse("7,1"));
  REQUIRE(d1.size() == 1);
  CHECK(d1[0].weights == std::vector<int>{2, 2, 2, 2});

  auto d2 =
      weighted_diagram(ComplexSimpleType::sp_half(3), Partition::parse("4,2"));
  REQUIRE(d2.size() == 1);
  CHECK(d2[0].weights == std::vector<int>{2, 0, 2});

  auto d3 = weighted_diagram(ComplexSimpleType::so(8), Partition::parse("4,4"));
  REQUIRE(d3.size() == 2);
  CHECK(d3[0].orbit_label == OrbitLabel::VeryEvenI);
  CHECK(d3[0].weights == std::vector<int>{0, 2, 2, 0});
  CHECK(d3[1].orbit_label == OrbitLabel::VeryEvenII);
  CHECK(d3[1].weights == std::vector<int>{0, 2, 0, 2});

  auto d4 = weighted_diagram(ComplexSimpleType::sl(4), Partition::parse("3,1"));
  REQUIRE(d4.size() == 1);
  CHECK(d4[0].weights == std::vector<int>{2, 0, 2});

  CHECK_THROWS_AS(
      weighted_diagram(ComplexSimpleType::so(7), Partition::parse("2,2,2,1")),
      invalid_partition);
}

TEST_CASE("all weights lie in {0,1,2}, exhaustively to ambient 16") {
  for (int n = 2; n <= 16; ++n) {
    std::vector<ComplexSimpleType> types;
    types.push_back(ComplexSimpleType::sl(n));
    if (n % 2 == 0) types.push_back(ComplexSimpleType::sp_half(n / 2));
    if (n >= 5 && n != 4 && n != 2) types.push_back(ComplexSimpleType::so(n));
    if (n == 3) types.push_back(ComplexSimpleType::so(3));
    for (const auto& g : types)
      for (const auto& [p, orbits] : valid_partitions(g))
        for (const auto& d : weighted_diagram(g, p))
          for (int w : d.weights) {
            CHECK(w >= 0);
            CHECK(w <= 2);
          }
  }
}

TEST_CASE("type A diagrams are palindromic") {
  for (int n = 2; n <= 12; ++n)
    for (const auto& [p, orbits] : valid_partitions(ComplexSimpleType::sl(n)))
      for (const auto& d : weighted_diagram(ComplexSimpleType::sl(n), p)) {
        std::vector<int> rev(d.weights.rbegin(), d.weights.rend());
        CHECK(rev == d.weights);
      }
}

TEST_CASE("very even: both routes agree on every valid partition to 16") {
  for (int n = 2; n <= 16; n += 2) {
    std::vector<ComplexSimpleType> types = {ComplexSimpleType::sl(n),
                                            ComplexSimpleType::sp_half(n / 2)};
    if (n >= 6) types.push_back(ComplexSimpleType::so(n));
    for (const auto& g : types)
      for (const auto& [p, orbits] : valid_partitions(g)) {
        bool ve = is_very_even(p);
        for (const auto& d : weighted_diagram(g, p))
          CHECK(very_even_from_diagram(g, d) == ve);
      }
  }
}

TEST_CASE("very even reference cases") {
  CHECK(is_very_even(Partition::parse("4,2")));
  auto sp3 = ComplexSimpleType::sp_half(3);
  auto d = weighted_diagram(sp3, Partition::parse("4,2"))[0];
  CHECK(very_even_from_diagram(sp3, d));

  auto sp2 = ComplexSimpleType::sp_half(2);
  auto d2 = weighted_diagram(sp2, Partition::parse("2,1,1"))[0];
  CHECK(d2.weights == std::vector<int>{1, 0});
  CHECK(!very_even_from_diagram(sp2, d2));
  CHECK(!is_very_even(Partition::parse("2,1,1")));

  auto so8 = ComplexSimpleType::so(8);
  auto d3 = weighted_diagram(so8, Partition::parse("7,1"))[0];
  CHECK(!very_even_from_diagram(so8, d3));

  CHECK_THROWS_AS(
      very_even_from_diagram(ComplexSimpleType::so(7),
                             WeightedDiagram{'B', {0, 0, 0}, OrbitLabel::None}),
      odd_ambient);
}

TEST_CASE("very even implies even") {
  for (int n = 2; n <= 14; n += 2)
    for (const auto& [p, orbits] : valid_partitions(ComplexSimpleType::sl(n)))
      if (is_very_even(p)) CHECK(is_even_hom(ComplexSimpleType::sl(n), p));
}

TEST_CASE("even homomorphism predicate") {
  auto sl4 = ComplexSimpleType::sl(4);
  CHECK(is_even_hom(sl4, Partition::parse("3,1")));
  CHECK(!is_even_hom(sl4, Partition::parse("2,1,1")));
  CHECK(is_even_hom(sl4, Partition::parse("4")));
}

TEST_CASE("triality caveat on D4") {
  WeightedDiagram all2{'D', {2, 2, 2, 2}, OrbitLabel::None};
  CHECK(!very_even_under_triality(all2));
  WeightedDiagram d1{'D', {2, 0, 2, 2}, OrbitLabel::None};
  CHECK(!very_even_under_triality(d1));
  WeightedDiagram d2{'D', {0, 2, 2, 0}, OrbitLabel::None};
  CHECK(!very_even_under_triality(d2));
  // No diagram of an actual D4 partition separates all three outer nodes.
  for (const auto& [p, orbits] : valid_partitions(ComplexSimpleType::so(8)))
    for (const auto& d : weighted_diagram(ComplexSimpleType::so(8), p))
      CHECK(!very_even_under_triality(d));
}

TEST_CASE("clebsch-gordan closed form") {
  CHECK(clebsch_gordan(2, 2) == std::vector<int>{3, 1});
  CHECK(clebsch_gordan(1, 5) == std::vector<int>{5});
  CHECK(clebsch_gordan(2, 3) == std::vector<int>{4, 2});
}

TEST_CASE("clebsch-gordan matches the weight-multiset oracle to 12") {
  for (int k = 1; k <= 12; ++k)
    for (int l = 1; l <= 12; ++l)
      CHECK(clebsch_gordan(k, l) == tensor_decompose_oracle(k, l));
}

TEST_CASE("even times even has only odd summands") {
  for (int k = 2; k <= 12; k += 2)
    for (int l = 2; l <= 12; l += 2)
      for (int d : clebsch_gordan(k, l)) CHECK(d % 2 == 1);
}

TEST_CASE("diagonal restriction is bilinear") {
  DimensionMultiset mv{{2, 1}, {4, 1}};
  DimensionMultiset mw{{2, 2}};
  DimensionMultiset out = diagonal_restriction(mv, mw);
  // 2x2 -> 3+1 (x2), 4x2 -> 5+3 (x2)
  CHECK(out[1] == 2);
  CHECK(out[3] == 4);
  CHECK(out[5] == 2);
  long total = 0;
  for (const auto& [d, c] : out) total += d * c;
  CHECK(total == (2 + 4) * (2 * 2));
}
