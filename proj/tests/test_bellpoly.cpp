#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bellseq/bellpoly.hpp"
#include "oracles.hpp"

using namespace bellseq;

namespace {

std::vector<std::vector<int>> exponents_of(const std::vector<MultiIndex>& indices) {
  std::vector<std::vector<int>> out;
  for (const auto& index : indices) out.push_back(index.exponents());
  return out;
}

std::vector<Rational> ones(std::size_t count) { return std::vector<Rational>(count, Rational(1)); }

}  // namespace

TEST_CASE("enumerate_pi examples") {
  CHECK(exponents_of(enumerate_pi(3, 2)) == std::vector<std::vector<int>>{{1, 1}});
  CHECK(exponents_of(enumerate_pi(4, 2)) == std::vector<std::vector<int>>{{1, 0, 1}, {0, 2, 0}});
  for (int n = 0; n <= 8; ++n) CHECK(exponents_of(enumerate_pi(n, n)) == std::vector<std::vector<int>>{{n}});
  CHECK(enumerate_pi(2, 5).empty());
  CHECK(enumerate_pi(4, 0).empty());
  CHECK(exponents_of(enumerate_pi(6, 3)) == std::vector<std::vector<int>>{{2, 0, 0, 1}, {1, 1, 1, 0}, {0, 3, 0, 0}});
  CHECK_THROWS_AS(enumerate_pi(-1, 0), std::invalid_argument);
}

TEST_CASE("enumerate_pi matches exhaustive search and partition counts") {
  for (int n = 0; n <= 9; ++n) {
    for (int k = 0; k <= n; ++k) {
      const auto found = exponents_of(enumerate_pi(n, k));
      auto brute = oracle::brute_force_pi(n, k);
      std::sort(brute.begin(), brute.end(), std::greater<>());
      CHECK(found == brute);
      CHECK(Integer(found.size()) == oracle::partitions_exact(n, k));
    }
  }
  for (int n = 10; n <= 15; ++n) {
    for (int k = 0; k <= n; ++k) {
      const auto indices = enumerate_pi(n, k);
      CHECK(Integer(indices.size()) == oracle::partitions_exact(n, k));
      for (const auto& index : indices) {
        // Re-assert the constraints post hoc.
        int parts = 0, weight = 0;
        const auto& e = index.exponents();
        REQUIRE(e.size() == static_cast<std::size_t>(n - k + 1));
        for (std::size_t i = 0; i < e.size(); ++i) {
          parts += e[i];
          weight += static_cast<int>(i + 1) * e[i];
        }
        CHECK(parts == k);
        CHECK(weight == n);
      }
    }
  }
}

TEST_CASE("MultiIndex rejects violated constraints") {
  CHECK_NOTHROW(MultiIndex(4, 2, {0, 2, 0}));
  CHECK_THROWS_AS(MultiIndex(4, 2, {0, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(MultiIndex(4, 2, {0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(MultiIndex(2, 3, {}), std::invalid_argument);
}

TEST_CASE("bell_symbolic examples and rendering") {
  const auto b32 = bell_symbolic(3, 2);
  REQUIRE(b32.terms().size() == 1);
  CHECK(b32.terms()[0].coefficient == 3);
  CHECK(b32.to_string() == "3*x1*x2");
  CHECK(bell_symbolic(4, 2).to_string() == "4*x1*x3 + 3*x2^2");
  CHECK(bell_symbolic(5, 5).to_string() == "x1^5");
  CHECK(bell_symbolic(6, 3).to_string() == "15*x1^2*x4 + 60*x1*x2*x3 + 15*x2^3");
  CHECK(bell_symbolic(0, 0).to_string() == "1");
  CHECK(bell_symbolic(3, 4).to_string() == "0");
  CHECK(bell_symbolic(3, 0).to_string() == "0");
  for (int n = 1; n <= 10; ++n) {
    const auto b = bell_symbolic(n, 1);
    REQUIRE(b.terms().size() == 1);
    CHECK(b.terms()[0].coefficient == 1);
    CHECK(b.to_string() == "x" + std::to_string(n));
  }
}

TEST_CASE("symbolic coefficients are positive and sum to Stirling numbers") {
  const auto stirling = oracle::stirling2_triangle(15);
  for (int n = 0; n <= 15; ++n) {
    for (int k = 0; k <= n; ++k) {
      Integer sum = 0;
      for (const auto& term : bell_symbolic(n, k).terms()) {
        CHECK(term.coefficient > 0);
        sum += term.coefficient;
      }
      CHECK(sum == stirling[n][k]);
    }
  }
}

TEST_CASE("bell_eval examples") {
  CHECK(bell_eval(4, 2, ones(3)) == Rational(7));
  CHECK(bell_eval_recurrence(4, 2, ones(3)) == Rational(7));
  CHECK(bell_eval_recurrence(5, 3, ones(3)) == Rational(25));
  CHECK(bell_eval(5, 5, std::vector<Rational>{3}) == Rational(243));
  const std::vector<Polynomial> jacobsthal_args{Polynomial(1), Polynomial::monomial(4, 1)};
  CHECK(bell_eval(3, 2, jacobsthal_args) == Polynomial::monomial(12, 1));
  CHECK(bell_eval_recurrence(3, 2, jacobsthal_args) == Polynomial::monomial(12, 1));
  CHECK(bell_eval_recurrence(0, 0, ones(1)) == Rational(1));
  for (int n = 1; n <= 6; ++n) CHECK(bell_eval_recurrence(n, 0, ones(n + 1)) == Rational(0));
  CHECK(bell_eval(3, 7, std::vector<Rational>{}) == Rational(0));
  // Arguments past n-k+1 are ignored.
  CHECK(bell_eval(4, 2, std::vector<Rational>{1, 1, 1, 99, 99}) == Rational(7));
}

TEST_CASE("bell_eval rejects short argument lists") {
  CHECK_THROWS_AS(bell_eval(4, 2, ones(2)), std::invalid_argument);
  CHECK_THROWS_AS(bell_eval_recurrence(4, 2, ones(2)), std::invalid_argument);
  CHECK_THROWS_AS(bell_eval(5, 1, ones(4)), std::invalid_argument);
}

TEST_CASE("definition and recurrence agree on random arguments, k <= n <= 15") {
  oracle::Draw draw(2024);
  for (int n = 0; n <= 15; ++n) {
    std::vector<Rational> xs;
    for (int i = 0; i <= n; ++i) xs.push_back(Rational(draw.integer(-3, 3)));
    for (int k = 0; k <= n; ++k) CHECK(bell_eval(n, k, xs) == bell_eval_recurrence(n, k, xs));
  }
  for (int n = 0; n <= 9; ++n) {
    std::vector<Polynomial> xs;
    for (int i = 0; i <= n; ++i) xs.push_back(draw.polynomial(1, 2));
    for (int k = 0; k <= n; ++k) CHECK(bell_eval(n, k, xs) == bell_eval_recurrence(n, k, xs));
  }
}

TEST_CASE("all-ones evaluation reproduces the Stirling and Bell triangles") {
  const auto stirling = oracle::stirling2_triangle(15);
  const auto bell_numbers = oracle::bell_numbers(15);
  for (int n = 0; n <= 15; ++n) {
    Rational row_sum;
    for (int k = 0; k <= n; ++k) {
      const Rational value = bell_eval(n, k, ones(n + 1));
      CHECK(value == Rational(stirling[n][k]));
      row_sum += value;
    }
    CHECK(row_sum == Rational(bell_numbers[n]));
  }
  CHECK(bell_numbers[15] == Integer("1382958545"));
}

TEST_CASE("BellTriangle memoizes bell_eval") {
  BellTriangle<Rational> memo(ones(6));
  CHECK(memo(5, 3) == Rational(25));
  CHECK(memo(5, 3) == Rational(25));
  CHECK(memo(4, 2) == Rational(7));
}

TEST_CASE("two-term closed form") {
  CHECK(bell_closed_two_term(4, 3, Rational(1), Rational(1)) == Rational(12));
  CHECK(bell_eval(4, 3, std::vector<Rational>{1, 2, 0}) == Rational(12));
  CHECK(bell_closed_two_term(5, 2, Rational(7), Rational(-3)) == Rational(0));
  CHECK(bell_closed_two_term(2, 1, Rational(2), Rational(1)) == Rational(2));
  CHECK(bell_closed_two_term(3, 1, Rational(0), Rational(5)) == Rational(0));

  oracle::Draw draw(99);
  for (int trial = 0; trial < 10; ++trial) {
    const Rational c1 = draw.rational(5), c2 = draw.rational(5);
    for (int n = 0; n <= 15; ++n) {
      std::vector<Rational> xs(static_cast<std::size_t>(n) + 1, Rational(0));
      xs[0] = c1;
      if (xs.size() > 1) xs[1] = Rational(2) * c2;
      for (int k = 0; k <= n; ++k) CHECK(bell_closed_two_term(n, k, c1, c2) == bell_eval(n, k, xs));
    }
  }
}

TEST_CASE("three-term closed form") {
  CHECK(bell_closed_three_term(3, 1) == 1);
  CHECK(bell_eval(3, 1, std::vector<Rational>{1, 2, 6}) == Rational(6));
  CHECK(bell_closed_three_term(4, 2) == 3);
  CHECK(bell_eval(4, 2, std::vector<Rational>{1, 2, 6}) == Rational(36));
  for (int n = 0; n <= 10; ++n) CHECK(bell_closed_three_term(n, n) == 1);
  for (int n = 0; n <= 15; ++n) {
    std::vector<Rational> xs(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int i = 0; i < 3 && i <= n; ++i) xs[i] = Rational(factorial(i + 1));
    for (int k = 0; k <= n; ++k) {
      CHECK(Rational(bell_closed_three_term(n, k)) * Rational(factorial(n)) / Rational(factorial(k)) ==
            bell_eval(n, k, xs));
    }
  }
}
