#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bellseq {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT(implicit)
  Rational(Integer value) : num_(std::move(value)) {}  // NOLINT(implicit)
  Rational(Integer num, Integer den);

  const Integer& numerator() const { return num_; }
  const Integer& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

  /// `p/q`, with `/q` omitted when q = 1.
  std::string to_string() const;

 private:
  void normalize();

  Integer num_{0};
  Integer den_{1};
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

/// Dense univariate polynomial in `x` with rational coefficients.
/// coefficients()[i] is the coefficient of x^i; the highest stored
/// coefficient is never zero, so the zero polynomial is the empty list.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::int64_t constant) : Polynomial(Rational(constant)) {}  // NOLINT(implicit)
  Polynomial(Rational constant);  // NOLINT(implicit)
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients)
      : Polynomial(std::vector<Rational>(coefficients)) {}

  /// coefficient * x^power
  static Polynomial monomial(Rational coefficient, unsigned power);
  static Polynomial x() { return monomial(Rational(1), 1); }

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Coefficient of x^power; zero beyond the degree.
  Rational coefficient(std::size_t power) const;

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  Rational evaluate(const Rational& point) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial lhs, const Polynomial& rhs) { return lhs *= rhs; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Ascending powers of x, e.g. `1+6x+4x^2`, `-1/2x^3`, `0`.
  std::string to_string() const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& value);

enum class RingKind { rational, polynomial };

template <class R>
struct ring_traits;

template <>
struct ring_traits<Rational> {
  static constexpr RingKind kind = RingKind::rational;
  static constexpr const char* name = "rational";
};

template <>
struct ring_traits<Polynomial> {
  static constexpr RingKind kind = RingKind::polynomial;
  static constexpr const char* name = "polynomial";
};

/// A commutative ring element usable as a Bell-polynomial argument.
/// Every such ring contains the rationals.
template <class R>
concept RingElement = std::regular<R> && std::constructible_from<R, Rational> &&
                      requires(const R a, const R b) {
                        { a + b } -> std::same_as<R>;
                        { a - b } -> std::same_as<R>;
                        { a * b } -> std::same_as<R>;
                        { -a } -> std::same_as<R>;
                        { a.is_zero() } -> std::convertible_to<bool>;
                        { a.to_string() } -> std::same_as<std::string>;
                        ring_traits<R>::kind;
                      };

template <RingElement R>
R power(R base, unsigned exponent) {
  R result(Rational(1));
  while (exponent != 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent != 0) base = base * base;
  }
  return result;
}

/// t(t-1)...(t-k+1)/k! for any integer t. Throws std::invalid_argument for k < 0.
Integer generalized_binomial(std::int64_t t, std::int64_t k);

/// generalized_binomial, but 0 for k < 0 (the summation convention).
Integer binomial_or_zero(std::int64_t t, std::int64_t k);

/// n! for n >= 0.
Integer factorial(std::int64_t n);

}  // namespace bellseq
