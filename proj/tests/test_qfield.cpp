#include "superschur/json_io.hpp"
#include "superschur/qfield.hpp"

#include <doctest.h>

#include <random>

using namespace superschur;

namespace {

LaurentPoly q(int e = 1) { return LaurentPoly::q(e); }

LaurentPoly random_poly(std::mt19937 &rng) {
  std::uniform_int_distribution<int> len(0, 4), exp(-4, 4), coeff(-5, 5);
  std::vector<LaurentPoly::Term> terms;
  for (int k = len(rng); k > 0; --k)
    terms.emplace_back(exp(rng), Integer(coeff(rng)));
  return LaurentPoly::from_terms(std::move(terms));
}

} // namespace

TEST_CASE("quantum integers and factorials") {
  CHECK(quantum_integer(0) == LaurentPoly(0));
  CHECK(quantum_integer(1) == LaurentPoly(1));
  CHECK(quantum_integer(2) == q() + q(-1));
  CHECK(quantum_factorial(0) == LaurentPoly(1));
  CHECK(quantum_factorial(2) == q() + q(-1));
  CHECK(quantum_factorial(3) == (q() + q(-1)) * (q(2) + LaurentPoly(1) + q(-2)));
  for (int k = 0; k < 8; ++k)
    CHECK(quantum_integer(k).bar() == quantum_integer(k));
}

TEST_CASE("gaussian binomials") {
  CHECK(gaussian_binomial(7, 0) == LaurentPoly(1));
  CHECK(gaussian_binomial(-3, 0) == LaurentPoly(1));
  CHECK(gaussian_binomial(2, 1) == q() + q(-1));
  CHECK(gaussian_binomial(3, 2) == q(2) + LaurentPoly(1) + q(-2));
  for (int z = -4; z <= 7; ++z)
    for (int t = 0; t <= 5; ++t) {
      const LaurentPoly g = gaussian_binomial(z, t);
      CHECK(g.bar() == g);
      CHECK(parity_twist(g, true) == g);
      if (z >= t)
        CHECK(g.evaluate(Rational(1)) == Rational(binomial(z, t)));
    }
  // z < t >= 0 with z >= 0 vanishes, as the product contains the factor z - z = 0.
  CHECK(gaussian_binomial(2, 3).is_zero());
}

TEST_CASE("parity twist") {
  CHECK(parity_twist(q(2), true) == q(-2));
  CHECK(parity_twist(q() + q(-1), true) == q() + q(-1));
  CHECK(parity_twist(LaurentPoly(1), false) == LaurentPoly(1));
  CHECK(parity_twist(q(3), false) == q(3));
}

TEST_CASE("specialization") {
  CHECK(specialize(RatFn(q() + q(-1)), Rational(2)) == Rational(5, 2));
  CHECK(specialize(RatFn(quantum_integer(2) * quantum_integer(2)), Rational(2)) == Rational(25, 4));
  const RatFn pole(LaurentPoly(1), q() - q(-1));
  CHECK_THROWS_AS(specialize(pole, Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(specialize(pole, Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(specialize(pole, Rational(-1)), std::invalid_argument);
  // A denominator vanishing at an admissible point is a separate error.
  CHECK_THROWS_AS(specialize(RatFn(LaurentPoly(1), q() - LaurentPoly(2)), Rational(2)), std::domain_error);
  CHECK(specialize(pole, Rational(2)) == Rational(2, 3));
}

TEST_CASE("Laurent polynomial ring axioms on random samples") {
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 200; ++trial) {
    const LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    CHECK((a * b).bar() == a.bar() * b.bar());
    if (!b.is_zero()) {
      auto quotient = LaurentPoly::divide_exact(a * b, b);
      REQUIRE(quotient.has_value());
      CHECK(*quotient == a);
    }
  }
}

TEST_CASE("no stored zero coefficients") {
  const LaurentPoly p = LaurentPoly::from_terms({{1, 2}, {1, -2}, {0, 0}, {-2, 3}});
  REQUIRE(p.terms().size() == 1);
  CHECK(p.terms()[0] == LaurentPoly::Term{-2, 3});
}

TEST_CASE("rational function canonical form") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    if (b.is_zero() || c.is_zero())
      continue;
    const RatFn x(a, b);
    CHECK(RatFn(a * c, b * c) == x);
    CHECK(RatFn(x.num(), x.den()) == x);
    CHECK(x.den().low_degree() == 0);
    CHECK(x.den().leading_coefficient() > 0);
    CHECK(LaurentPoly::gcd(x.num(), x.den()).is_one());
    if (!x.is_zero())
      CHECK(x * x.inverse() == RatFn(1));
  }
  CHECK(RatFn(LaurentPoly(-2), LaurentPoly(-4)) == RatFn(Rational(1, 2)));
  CHECK(RatFn(q(2) - LaurentPoly(1), q() - LaurentPoly(1)) == RatFn(q() + LaurentPoly(1)));
}

TEST_CASE("JSON round trip") {
  const LaurentPoly p = LaurentPoly::monomial(-3, Integer("123456789012345678901234567890")) + q(2);
  const Json j = to_json(p);
  CHECK(j.dump() == R"({"terms":[[-3,"123456789012345678901234567890"],[2,"1"]]})");
  CHECK(laurent_from_json(j) == p);
  const RatFn f(q() + LaurentPoly(3), q(2) - LaurentPoly(5));
  CHECK(ratfn_from_json(to_json(f)) == f);
  CHECK_THROWS_AS(laurent_from_json(Json::parse("[[1,2]]")), std::invalid_argument);
  CHECK_THROWS_AS(ratfn_from_json(Json::parse(R"({"num":{"terms":[]},"den":{"terms":[]}})")), std::invalid_argument);
}
