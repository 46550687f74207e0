#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bellseq/ring.hpp"
#include "bellseq/text.hpp"
#include "oracles.hpp"

using namespace bellseq;

TEST_CASE("rational arithmetic is exact and canonical") {
  CHECK(Rational(1) / Rational(2) + Rational(1) / Rational(3) == Rational(Integer(5), Integer(6)));
  CHECK(Rational(Integer(4), Integer(-6)).numerator() == -2);
  CHECK(Rational(Integer(4), Integer(-6)).denominator() == 3);
  CHECK(Rational(Integer(0), Integer(-7)).denominator() == 1);
  CHECK((Rational(3) - Rational(3)).to_string() == "0");
  CHECK(Rational(Integer(-3), Integer(4)).to_string() == "-3/4");
  CHECK(Rational(Integer(2), Integer(4)) < Rational(1));
  CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("polynomial arithmetic") {
  const Polynomial two_x = Polynomial::monomial(2, 1);
  CHECK(two_x * two_x == Polynomial::monomial(4, 2));
  const Polynomial p({1, 6, 4});
  CHECK(p + Polynomial() == p);
  CHECK((p - p).is_zero());
  CHECK((p - p).degree() == -1);
  CHECK(Polynomial({1, 0, 0}).degree() == 0);
  CHECK(p.evaluate(Rational(1)) == Rational(11));
  CHECK(p.coefficient(7) == Rational(0));
}

TEST_CASE("polynomial rendering") {
  CHECK(Polynomial().to_string() == "0");
  CHECK(Polynomial({1, 6, 4}).to_string() == "1+6x+4x^2");
  CHECK(Polynomial({0, -1}).to_string() == "-x");
  CHECK(Polynomial({-1, 0, 1}).to_string() == "-1+x^2");
  CHECK(Polynomial({Rational(0), Rational(Integer(-1), Integer(2))}).to_string() == "-1/2x");
}

TEST_CASE("parsing accepts the list grammar and the rendered forms") {
  CHECK(parse_polynomial("2x") == Polynomial::monomial(2, 1));
  CHECK(parse_polynomial("(1+2x)") == Polynomial({1, 2}));
  CHECK(parse_polynomial("-3x^2 + 1/2") == Polynomial({Rational(Integer(1), Integer(2)), Rational(0), Rational(-3)}));
  CHECK(parse_rational("-7/14") == Rational(Integer(-1), Integer(2)));
  CHECK(parse_polynomial("x") == Polynomial::x());
  CHECK_THROWS_AS(parse_rational("2x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_polynomial(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_polynomial("1+"), std::invalid_argument);
  CHECK_THROWS_AS(parse_polynomial("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_polynomial("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_polynomial("(1+x"), std::invalid_argument);

  CHECK(split_list("1,2x,0") == std::vector<std::string>{"1", "2x", "0"});
  CHECK(split_list("(1+2x),-1") == std::vector<std::string>{"(1+2x)", "-1"});
  CHECK(split_list("").empty());
  CHECK_THROWS_AS(split_list("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(split_list("(1,2"), std::invalid_argument);
  CHECK(mentions_indeterminate({"1", "2x"}));
  CHECK_FALSE(mentions_indeterminate({"1", "2/3"}));
}

TEST_CASE("rendering and parsing round-trip on random elements") {
  oracle::Draw draw(7);
  for (int i = 0; i < 300; ++i) {
    const Polynomial p = draw.polynomial(draw.integer(0, 5), 9);
    CHECK(parse_polynomial(p.to_string()) == p);
    const Rational q = draw.rational(1000);
    CHECK(parse_rational(q.to_string()) == q);
  }
}

TEST_CASE("generalized binomial examples") {
  CHECK(generalized_binomial(5, 2) == 10);
  CHECK(generalized_binomial(-1, 2) == 1);
  CHECK(generalized_binomial(-3, 3) == -10);
  for (int t = -20; t <= 20; ++t) CHECK(generalized_binomial(t, 0) == 1);
  CHECK(generalized_binomial(3, 5) == 0);
  CHECK_THROWS_AS(generalized_binomial(4, -1), std::invalid_argument);
  CHECK(binomial_or_zero(4, -1) == 0);
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
}

TEST_CASE("generalized binomial identities, brute force over |t| <= 20, k <= 10") {
  for (int t = -20; t <= 20; ++t) {
    for (int k = 0; k <= 10; ++k) {
      const Integer value = generalized_binomial(t, k);
      CHECK(Rational(value) == oracle::falling_binomial(t, k));
      if (t >= 0) CHECK(value == oracle::pascal_binomial(t, k));
      const Integer sign = (k % 2 == 0) ? 1 : -1;
      CHECK(value == sign * generalized_binomial(k - t - 1, k));
      if (k >= 1) CHECK(value == generalized_binomial(t - 1, k) + generalized_binomial(t - 1, k - 1));
    }
  }
}

TEST_CASE("ring axioms on random rational triples") {
  oracle::Draw draw(11);
  for (int i = 0; i < 500; ++i) {
    const Rational a = draw.rational(50), b = draw.rational(50), c = draw.rational(50);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a + Rational(0) == a);
    CHECK(a * Rational(1) == a);
    CHECK(a + (-a) == Rational(0));
    CHECK(a.denominator() > 0);
    CHECK(boost::multiprecision::gcd(a.numerator(), a.denominator()) == 1);
  }
}

TEST_CASE("ring axioms on random polynomial triples") {
  oracle::Draw draw(13);
  for (int i = 0; i < 200; ++i) {
    const Polynomial a = draw.polynomial(draw.integer(0, 4), 5);
    const Polynomial b = draw.polynomial(draw.integer(0, 4), 5);
    const Polynomial c = draw.polynomial(draw.integer(0, 4), 5);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + Polynomial() == a);
    CHECK(a * Polynomial(1) == a);
    CHECK((a + (-a)).is_zero());
    if (!a.is_zero()) CHECK_FALSE(a.coefficients().back().is_zero());
    // Multiplication is compatible with evaluation.
    const Rational point = draw.rational(4);
    CHECK((a * b).evaluate(point) == a.evaluate(point) * b.evaluate(point));
  }
}

TEST_CASE("power by squaring") {
  CHECK(power(Rational(2), 10) == Rational(1024));
  CHECK(power(Rational(-3), 0) == Rational(1));
  CHECK(power(Polynomial({1, 1}), 3) == Polynomial({1, 3, 3, 1}));
}
