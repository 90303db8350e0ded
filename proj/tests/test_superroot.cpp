#include "superschur/superroot.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

using namespace superschur;

TEST_CASE("parity") {
  CHECK(parity_of_index(Dims(2, 1, 1), 1) == 0);
  CHECK(parity_of_index(Dims(2, 1, 1), 3) == 1);
  CHECK(parity_of_index(Dims(1, 1, 1), 1) == 0);
  CHECK_THROWS(parity_of_index(Dims(1, 1, 1), 3));
  CHECK_THROWS(parity_of_index(Dims(1, 1, 1), 0));
}

TEST_CASE("bilinear form") {
  const Dims dims(2, 1, 1);
  CHECK(bilinear_form(dims, 1, 1) == 1);
  CHECK(bilinear_form(dims, 3, 3) == -1);
  CHECK(bilinear_form(dims, 1, 2) == 0);
  CHECK(bilinear_form(Dims(3, 3, 0), 1, 2) == 0);
  CHECK_THROWS(bilinear_form(dims, 1, 4));
}

TEST_CASE("dims validation") {
  CHECK_THROWS_AS(Dims(0, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(Dims(1, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(Dims(1, 1, -1), std::invalid_argument);
  CHECK(Dims(2, 1, 3).tensor_dim() == 27);
  CHECK(Dims(2, 1, 0).tensor_dim() == 1);
}

TEST_CASE("weights") {
  auto coords = [](const std::vector<Weight> &ws) {
    std::vector<std::vector<int>> out;
    for (const auto &w : ws)
      out.push_back(w.coords);
    return out;
  };
  CHECK(coords(enumerate_weights(Dims(1, 1, 2))) == std::vector<std::vector<int>>{{2, 0}, {1, 1}, {0, 2}});
  CHECK(coords(enumerate_weights(Dims(1, 1, 1))) == std::vector<std::vector<int>>{{1, 0}, {0, 1}});
  CHECK(coords(enumerate_weights(Dims(2, 1, 1))) == std::vector<std::vector<int>>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(enumerate_weights(Dims(1, 2, 0)).size() == 1);

  // C(d+m+n-1, m+n-1), each summing to d.
  const long expected[] = {1, 4, 10, 20, 35};
  for (int d = 0; d <= 4; ++d) {
    const auto ws = enumerate_weights(Dims(2, 2, d));
    CHECK(static_cast<long>(ws.size()) == expected[d]);
    for (const auto &w : ws) {
      int sum = 0;
      for (int c : w.coords)
        sum += c;
      CHECK(sum == d);
    }
  }
}

TEST_CASE("componentwise order") {
  CHECK(weight_leq(Weight({0, 1}), Weight({0, 2})));
  CHECK_FALSE(weight_leq(Weight({1, 0}), Weight({0, 2})));
  CHECK(weight_leq(Weight({3, 1}), Weight({3, 1})));
  CHECK_THROWS_AS(weight_leq(Weight({1}), Weight({1, 2})), std::invalid_argument);

  std::mt19937 rng(11);
  std::uniform_int_distribution<int> c(0, 2);
  auto draw = [&] { return Weight({c(rng), c(rng), c(rng)}); };
  for (int trial = 0; trial < 500; ++trial) {
    const Weight a = draw(), b = draw(), x = draw();
    if (weight_leq(a, b) && weight_leq(b, a))
      CHECK(a == b);
    if (weight_leq(a, b) && weight_leq(b, x))
      CHECK(weight_leq(a, x));
  }
}

TEST_CASE("positive roots") {
  const auto r21 = positive_roots(Dims(2, 1, 0));
  REQUIRE(r21.size() == 3);
  CHECK((r21[0].i == 1 && r21[0].j == 2 && !r21[0].odd()));
  CHECK((r21[1].i == 1 && r21[1].j == 3 && r21[1].odd()));
  CHECK((r21[2].i == 2 && r21[2].j == 3 && r21[2].odd()));

  const auto r11 = positive_roots(Dims(1, 1, 0));
  REQUIRE(r11.size() == 1);
  CHECK(r11[0].odd());

  const auto r22 = positive_roots(Dims(2, 2, 0));
  CHECK(r22.size() == 6);
  CHECK(std::count_if(r22.begin(), r22.end(), [](const Root &r) { return r.odd(); }) == 4);

  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) {
      const Dims dims(m, n, 0);
      const auto all = all_roots(dims);
      CHECK(all.size() == static_cast<std::size_t>((m + n) * (m + n - 1)));
      CHECK(std::count_if(all.begin(), all.end(), [](const Root &r) { return r.odd(); }) == 2 * m * n);
      for (const auto &r : all)
        CHECK(r.parity == (dims.parity(r.i) + dims.parity(r.j)) % 2);
      for (int i = 1; i < m + n; ++i)
        CHECK(simple_root(dims, i).odd() == (i == m));
    }
}

TEST_CASE("root arithmetic") {
  const Dims dims(2, 1, 0);
  const Root a(dims, 1, 2), b(dims, 2, 3);
  Root sum;
  REQUIRE(root_sum(dims, a, b, sum));
  CHECK(sum == Root(dims, 1, 3));
  CHECK_FALSE(root_sum(dims, a, a, sum));
  CHECK(structure_constant(a, b) == 1);
  // a.i == b.j: -(-1)^{parity a parity b}
  CHECK(structure_constant(Root(dims, 2, 3), Root(dims, 1, 2)) == -1);
  CHECK(structure_constant(Root(dims, 3, 1), Root(dims, 2, 3)) == 1);
  CHECK(Root(dims, 1, 3).negated() == Root(dims, 3, 1));
  CHECK(Root(dims, 1, 3).as_weight(3) == Weight({1, 0, -1}));
  CHECK_THROWS(Root(dims, 2, 2));
}
