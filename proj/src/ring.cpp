#include "bellseq/ring.hpp"

#include <stdexcept>
#include <utility>

namespace bellseq {

using boost::multiprecision::gcd;

Rational::Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  if (den_ == 1) return;
  Integer g = gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::operator-() const {
  Rational out = *this;
  out.num_ = -out.num_;
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == 1 && rhs.den_ == 1) {
    num_ += rhs.num_;
    return *this;
  }
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  if (den_ == 1 && rhs.den_ == 1) {
    num_ *= rhs.num_;
    return *this;
  }
  // Cross-reduce so the product is already in lowest terms.
  Integer g1 = gcd(num_, rhs.den_);
  Integer g2 = gcd(rhs.num_, den_);
  if (g1.is_zero()) g1 = 1;
  if (g2.is_zero()) g2 = 1;
  num_ = (num_ / g1) * (rhs.num_ / g2);
  den_ = (den_ / g2) * (rhs.den_ / g1);
  if (num_.is_zero()) den_ = 1;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero rational");
  return *this *= Rational(rhs.den_, rhs.num_);
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  const Integer left = lhs.num_ * rhs.den_;
  const Integer right = rhs.num_ * lhs.den_;
  if (left < right) return std::strong_ordering::less;
  if (left > right) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.to_string(); }

Polynomial::Polynomial(Rational constant) {
  if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::monomial(Rational coefficient, unsigned power) {
  std::vector<Rational> coeffs(power + 1);
  coeffs[power] = std::move(coefficient);
  return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational();
}

Rational Polynomial::evaluate(const Rational& point) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * point + *it;
  return acc;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) { return *this += -rhs; }

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> product(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) product[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(product);
  trim();
  return *this;
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    std::string body = c.to_string();
    const bool negative = c < Rational(0);
    if (negative) body.erase(0, 1);
    if (i > 0) {
      if (body == "1") body.clear();
      body += i == 1 ? "x" : "x^" + std::to_string(i);
    }
    if (negative) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    out += body;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& value) { return os << value.to_string(); }

Integer generalized_binomial(std::int64_t t, std::int64_t k) {
  if (k < 0) throw std::invalid_argument("generalized_binomial: negative lower index " + std::to_string(k));
  // After step i the accumulator equals binom(t, i), so each division is exact.
  Integer acc = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    acc *= Integer(t) - (i - 1);
    acc /= i;
  }
  return acc;
}

Integer binomial_or_zero(std::int64_t t, std::int64_t k) {
  return k < 0 ? Integer(0) : generalized_binomial(t, k);
}

Integer factorial(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("factorial of negative number");
  Integer acc = 1;
  for (std::int64_t i = 2; i <= n; ++i) acc *= i;
  return acc;
}

}  // namespace bellseq
