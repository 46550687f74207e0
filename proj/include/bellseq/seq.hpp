#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bellseq/bellpoly.hpp"
#include "bellseq/ring.hpp"

namespace bellseq {

/// Raised when an alternative closed form has a vanishing denominator.
class undefined_form_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The parameters (a, b, c_1, c_2, ...) of the sequence
///   y_0 = 1,  y_n = sum_{k=1}^n binom(an+bk, k-1) (k-1)!/n! B_{n,k}(1!c_1, 2!c_2, ...).
/// Coefficients past the end of `c` are zero.
template <RingElement R>
class BellSequenceSpec {
 public:
  BellSequenceSpec(std::int64_t a, std::int64_t b, std::vector<R> c) : a_(a), b_(b), c_(std::move(c)) {
    if (a_ == 0 && b_ == 0) throw std::invalid_argument("a and b must not both be zero");
  }

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  const std::vector<R>& c() const { return c_; }
  static constexpr RingKind ring() { return ring_traits<R>::kind; }

  /// c_j for j >= 1, zero past the stored list.
  R coefficient(std::size_t j) const { return j >= 1 && j <= c_.size() ? c_[j - 1] : R(Rational(0)); }

  /// (1! c_1, 2! c_2, ..., (n+1)! c_{n+1}), zero-padded to length n+1. Enough
  /// arguments for every B_{m,k} with m <= n.
  std::vector<R> scaled_arguments(int n) const {
    std::vector<R> xs;
    xs.reserve(static_cast<std::size_t>(n) + 1);
    for (int j = 1; j <= n + 1; ++j) {
      const R cj = coefficient(static_cast<std::size_t>(j));
      xs.push_back(cj.is_zero() ? cj : R(Rational(factorial(j))) * cj);
    }
    return xs;
  }

  friend bool operator==(const BellSequenceSpec&, const BellSequenceSpec&) = default;

 private:
  std::int64_t a_;
  std::int64_t b_;
  std::vector<R> c_;
};

/// y_0 ... y_N of one spec. Negative indices read as zero.
template <RingElement R>
class SequenceWindow {
 public:
  SequenceWindow(BellSequenceSpec<R> spec, std::vector<R> values) : spec_(std::move(spec)), values_(std::move(values)) {
    if (values_.empty() || values_.front() != R(Rational(1))) {
      throw std::invalid_argument("SequenceWindow: y_0 must be 1");
    }
  }

  const BellSequenceSpec<R>& spec() const { return spec_; }
  const std::vector<R>& values() const { return values_; }
  /// Largest index held.
  int last() const { return static_cast<int>(values_.size()) - 1; }

  /// y_n, with y_n = 0 for n < 0. Throws std::out_of_range past the window.
  R at(int n) const {
    if (n < 0) return R(Rational(0));
    if (n > last()) throw std::out_of_range("index " + std::to_string(n) + " outside sequence window");
    return values_[static_cast<std::size_t>(n)];
  }

 private:
  BellSequenceSpec<R> spec_;
  std::vector<R> values_;
};

template <RingElement R>
SequenceWindow<R> bell_transform(const BellSequenceSpec<R>& spec, int last) {
  if (last < 0) throw std::invalid_argument("bell_transform: N must be non-negative");
  BellTriangle<R> bell(spec.scaled_arguments(last));
  std::vector<R> values{R(Rational(1))};
  for (int n = 1; n <= last; ++n) {
    const Rational n_factorial(factorial(n));
    R y(Rational(0));
    for (int k = 1; k <= n; ++k) {
      const R& b = bell(n, k);
      if (b.is_zero()) continue;
      const Rational weight =
          Rational(generalized_binomial(spec.a() * n + spec.b() * k, k - 1) * factorial(k - 1)) / n_factorial;
      if (weight.is_zero()) continue;
      y = y + R(weight) * b;
    }
    values.push_back(std::move(y));
  }
  return SequenceWindow<R>(spec, std::move(values));
}

/// The same sequence through
///   y_n = sum_{k=0}^n 1/(an+bk+1) binom(an+bk+1, k) k!/n! B_{n,k}(...).
/// Throws undefined_form_error naming (n, k) if some an+bk+1 vanishes.
template <RingElement R>
SequenceWindow<R> bell_transform_rewritten(const BellSequenceSpec<R>& spec, int last) {
  if (last < 0) throw std::invalid_argument("bell_transform_rewritten: N must be non-negative");
  for (int n = 0; n <= last; ++n) {
    for (int k = 0; k <= n; ++k) {
      if (spec.a() * n + spec.b() * k + 1 == 0) {
        throw undefined_form_error("rewritten form undefined at (n,k) = (" + std::to_string(n) + "," +
                                   std::to_string(k) + "): an+bk+1 = 0");
      }
    }
  }
  BellTriangle<R> bell(spec.scaled_arguments(last));
  std::vector<R> values;
  for (int n = 0; n <= last; ++n) {
    const Rational n_factorial(factorial(n));
    R y(Rational(0));
    for (int k = 0; k <= n; ++k) {
      const R& b = bell(n, k);
      if (b.is_zero()) continue;
      const std::int64_t t = spec.a() * n + spec.b() * k + 1;
      const Rational weight = Rational(generalized_binomial(t, k) * factorial(k)) / (Rational(t) * n_factorial);
      y = y + R(weight) * b;
    }
    values.push_back(std::move(y));
  }
  return SequenceWindow<R>(spec, std::move(values));
}

// Named presets.

enum class PresetName { fibonacci, tribonacci, jacobsthal, catalan, motzkin, fuss_catalan };

/// Throws std::invalid_argument for an unknown name.
PresetName parse_preset_name(std::string_view name);
std::string_view preset_name(PresetName name);

/// A spec together with its relation to the classical sequence s:
///   s_n = leading[n]        for n < offset,
///   s_n = y_{n - offset}    otherwise.
template <RingElement R>
struct Preset {
  PresetName name;
  BellSequenceSpec<R> spec;
  int offset;
  std::vector<R> leading;

  /// s_0 ... s_last from a window covering y_0 ... y_{last - offset}.
  std::vector<R> classical(const SequenceWindow<R>& window, int last) const {
    std::vector<R> out;
    for (int n = 0; n <= last; ++n) {
      out.push_back(n < offset ? leading[static_cast<std::size_t>(n)] : window.at(n - offset));
    }
    return out;
  }
};

using AnyPreset = std::variant<Preset<Rational>, Preset<Polynomial>>;

Preset<Rational> fibonacci_preset();
Preset<Rational> tribonacci_preset();
Preset<Polynomial> jacobsthal_preset();
Preset<Rational> catalan_preset();
Preset<Rational> motzkin_preset();
/// a = 0, c = (1); throws std::invalid_argument for b = 0.
Preset<Rational> fuss_catalan_preset(std::int64_t b);

/// `b` is required for fuss_catalan and ignored otherwise.
AnyPreset preset(PresetName name, std::optional<std::int64_t> b = std::nullopt);

/// binom(bn, n) / ((b-1)n + 1).
Rational fuss_catalan_closed(std::int64_t b, int n);

// Linear recurrences a_n = c_1 a_{n-1} + ... + c_d a_{n-d}.

template <RingElement R>
class RecurrenceSpec {
 public:
  RecurrenceSpec(std::vector<R> coefficients, std::vector<R> initial)
      : coefficients_(std::move(coefficients)), initial_(std::move(initial)) {
    if (coefficients_.empty()) throw std::invalid_argument("recurrence needs at least one coefficient");
    if (coefficients_.size() != initial_.size()) {
      throw std::invalid_argument("recurrence coefficients and initial values differ in length");
    }
  }

  std::size_t order() const { return coefficients_.size(); }
  const std::vector<R>& coefficients() const { return coefficients_; }
  const std::vector<R>& initial() const { return initial_; }

  /// a_0 ... a_last by iterating the recurrence directly.
  std::vector<R> iterate(int last) const {
    std::vector<R> out;
    for (int n = 0; n <= last; ++n) {
      if (static_cast<std::size_t>(n) < order()) {
        out.push_back(initial_[static_cast<std::size_t>(n)]);
        continue;
      }
      R next(Rational(0));
      for (std::size_t i = 1; i <= order(); ++i) next = next + coefficients_[i - 1] * out[n - i];
      out.push_back(std::move(next));
    }
    return out;
  }

  /// True when values[n] = sum_i c_i values[n-i] for every order() <= n < size.
  bool satisfied_by(const std::vector<R>& values) const {
    for (std::size_t n = order(); n < values.size(); ++n) {
      R rhs(Rational(0));
      for (std::size_t i = 1; i <= order(); ++i) rhs = rhs + coefficients_[i - 1] * values[n - i];
      if (rhs != values[n]) return false;
    }
    return true;
  }

 private:
  std::vector<R> coefficients_;
  std::vector<R> initial_;
};

template <RingElement R>
struct Decomposition {
  std::vector<R> lambdas;
  SequenceWindow<R> basis;
  /// a_n = sum_j lambda_j y_{n-j}, n = 0 ... N.
  std::vector<R> reconstruction;
};

/// Writes a_n = lambda_0 y_n + ... + lambda_{d-1} y_{n-d+1}, where y is the
/// a = 0, b = 1 sequence with c = the recurrence coefficients.
template <RingElement R>
Decomposition<R> decompose(const RecurrenceSpec<R>& rec, int last) {
  const int d = static_cast<int>(rec.order());
  if (last < d - 1) throw std::invalid_argument("decompose: N must be at least d-1");
  SequenceWindow<R> y = bell_transform(BellSequenceSpec<R>(0, 1, rec.coefficients()), last);

  // Unit lower-triangular solve: a_i = sum_{j<=i} lambda_j y_{i-j}.
  std::vector<R> lambdas;
  for (int i = 0; i < d; ++i) {
    R lambda = rec.initial()[static_cast<std::size_t>(i)];
    for (int j = 0; j < i; ++j) lambda = lambda - lambdas[static_cast<std::size_t>(j)] * y.at(i - j);
    lambdas.push_back(std::move(lambda));
  }

  std::vector<R> reconstruction;
  for (int n = 0; n <= last; ++n) {
    R value(Rational(0));
    for (int j = 0; j < d; ++j) value = value + lambdas[static_cast<std::size_t>(j)] * y.at(n - j);
    reconstruction.push_back(std::move(value));
  }
  return Decomposition<R>{std::move(lambdas), std::move(y), std::move(reconstruction)};
}

// Binomial-sum closed forms for the a = 0, b = 1 examples.

/// sum_{k=0}^{n-1} binom(k, n-1-k) = f_n, n >= 1.
Rational binomial_sum_fibonacci(int n);
/// sum_{k=0}^{n-2} sum_l binom(k, l) binom(l, n-2-k-l) = t_n, n >= 2.
Rational binomial_double_sum_tribonacci(int n);
/// sum_{k=0}^{n-1} binom(k, n-1-k) (2x)^{n-1-k} = J_n(x), n >= 1.
Polynomial jacobsthal_closed(int n);

}  // namespace bellseq
