#include "bellseq/seq.hpp"

#include <array>

namespace bellseq {
namespace {

constexpr std::array<std::pair<PresetName, std::string_view>, 6> kPresetNames{{
    {PresetName::fibonacci, "fibonacci"},
    {PresetName::tribonacci, "tribonacci"},
    {PresetName::jacobsthal, "jacobsthal"},
    {PresetName::catalan, "catalan"},
    {PresetName::motzkin, "motzkin"},
    {PresetName::fuss_catalan, "fuss_catalan"},
}};

}  // namespace

PresetName parse_preset_name(std::string_view name) {
  for (const auto& [value, text] : kPresetNames) {
    if (text == name) return value;
  }
  throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
}

std::string_view preset_name(PresetName name) {
  for (const auto& [value, text] : kPresetNames) {
    if (value == name) return text;
  }
  return "?";
}

Preset<Rational> fibonacci_preset() {
  return {PresetName::fibonacci, BellSequenceSpec<Rational>(0, 1, {1, 1}), 1, {0}};
}

Preset<Rational> tribonacci_preset() {
  return {PresetName::tribonacci, BellSequenceSpec<Rational>(0, 1, {1, 1, 1}), 2, {0, 0}};
}

Preset<Polynomial> jacobsthal_preset() {
  return {PresetName::jacobsthal,
          BellSequenceSpec<Polynomial>(0, 1, {Polynomial(1), Polynomial::monomial(2, 1)}),
          1,
          {Polynomial(0)}};
}

// C_{n+1} = y_n; C_0 = 1 is not produced by the transform.
Preset<Rational> catalan_preset() {
  return {PresetName::catalan, BellSequenceSpec<Rational>(1, 0, {2, 1}), 1, {1}};
}

Preset<Rational> motzkin_preset() {
  return {PresetName::motzkin, BellSequenceSpec<Rational>(1, 0, {1, 1}), 0, {}};
}

Preset<Rational> fuss_catalan_preset(std::int64_t b) {
  if (b == 0) throw std::invalid_argument("fuss_catalan needs b != 0");
  return {PresetName::fuss_catalan, BellSequenceSpec<Rational>(0, b, {1}), 0, {}};
}

AnyPreset preset(PresetName name, std::optional<std::int64_t> b) {
  switch (name) {
    case PresetName::fibonacci:
      return fibonacci_preset();
    case PresetName::tribonacci:
      return tribonacci_preset();
    case PresetName::jacobsthal:
      return jacobsthal_preset();
    case PresetName::catalan:
      return catalan_preset();
    case PresetName::motzkin:
      return motzkin_preset();
    case PresetName::fuss_catalan:
      if (!b) throw std::invalid_argument("fuss_catalan needs parameter b");
      return fuss_catalan_preset(*b);
  }
  throw std::invalid_argument("unknown preset");
}

Rational fuss_catalan_closed(std::int64_t b, int n) {
  if (b == 0) throw std::invalid_argument("fuss_catalan_closed needs b != 0");
  if (n < 0) throw std::invalid_argument("fuss_catalan_closed needs n >= 0");
  // (b-1)n + 1 = 0 forces b = 0, so the denominator never vanishes here.
  return Rational(generalized_binomial(b * n, n)) / Rational((b - 1) * n + 1);
}

Rational binomial_sum_fibonacci(int n) {
  if (n < 1) throw std::invalid_argument("binomial_sum_fibonacci needs n >= 1");
  Integer total = 0;
  for (int k = 0; k <= n - 1; ++k) total += binomial_or_zero(k, n - 1 - k);
  return Rational(total);
}

Rational binomial_double_sum_tribonacci(int n) {
  if (n < 2) throw std::invalid_argument("binomial_double_sum_tribonacci needs n >= 2");
  Integer total = 0;
  for (int k = 0; k <= n - 2; ++k) {
    for (int l = 0; l <= k; ++l) total += generalized_binomial(k, l) * binomial_or_zero(l, n - 2 - k - l);
  }
  return Rational(total);
}

Polynomial jacobsthal_closed(int n) {
  if (n < 1) throw std::invalid_argument("jacobsthal_closed needs n >= 1");
  const Polynomial two_x = Polynomial::monomial(2, 1);
  Polynomial total;
  for (int k = 0; k <= n - 1; ++k) {
    const Integer coeff = binomial_or_zero(k, n - 1 - k);
    if (coeff.is_zero()) continue;
    total += Polynomial(Rational(coeff)) * power(two_x, static_cast<unsigned>(n - 1 - k));
  }
  return total;
}

}  // namespace bellseq
