#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "bellseq/bellpoly.hpp"
#include "bellseq/ring.hpp"
#include "bellseq/seq.hpp"

namespace bellseq {

/// Steps through the compositions of `total` into `parts` non-negative parts
/// in lexicographic order, starting at (0, ..., 0, total).
class CompositionOdometer {
 public:
  CompositionOdometer(int parts, int total);

  const std::vector<int>& current() const { return parts_; }
  /// Advances to the next composition; false once the last one has been seen.
  bool next();

 private:
  std::vector<int> parts_;
};

template <RingElement R>
struct ConvolutionReport {
  int r;
  int n;
  R lhs;
  R rhs;
  bool matched;
};

/// sum over m_1 + ... + m_r = n of y_{m_1 - delta} ... y_{m_r - delta},
/// summed composition by composition.
template <RingElement R>
R convolution_oracle(const SequenceWindow<R>& window, int r, int n, int delta = 0) {
  if (r < 1) throw std::invalid_argument("convolution_oracle: r must be >= 1");
  if (n < 0 || delta < 0) throw std::invalid_argument("convolution_oracle: n and delta must be non-negative");
  if (n - delta > window.last()) {
    throw std::invalid_argument("convolution_oracle: window ends at " + std::to_string(window.last()) +
                                ", need index " + std::to_string(n - delta));
  }
  R total(Rational(0));
  CompositionOdometer odometer(r, n);
  do {
    R product(Rational(1));
    for (int m : odometer.current()) {
      const int index = m - delta;
      if (index < 0) {
        product = R(Rational(0));
        break;
      }
      product = product * window.at(index);
      if (product.is_zero()) break;
    }
    if (!product.is_zero()) total = total + product;
  } while (odometer.next());
  return total;
}

/// r sum_{k=1}^n binom(an+bk+r-1, k-1) (k-1)!/n! B_{n,k}(1!c_1, 2!c_2, ...), using
/// (and filling) a Bell memo over spec.scaled_arguments. Throws std::domain_error
/// for n = 0, where the identity is not stated (the left side is 1 there).
template <RingElement R>
R convolution_closed(const BellSequenceSpec<R>& spec, int r, int n, BellTriangle<R>& bell) {
  if (r < 1) throw std::invalid_argument("convolution_closed: r must be >= 1");
  if (n == 0) throw std::domain_error("convolution closed form is stated for n >= 1");
  if (n < 0) throw std::invalid_argument("convolution_closed: n must be non-negative");
  if (bell.arguments().size() < static_cast<std::size_t>(n)) {
    throw std::invalid_argument("convolution_closed: Bell memo has too few arguments");
  }
  const Rational n_factorial(factorial(n));
  R total(Rational(0));
  for (int k = 1; k <= n; ++k) {
    const R& b = bell(n, k);
    if (b.is_zero()) continue;
    const std::int64_t t = spec.a() * n + spec.b() * k + r - 1;
    const Rational weight = Rational(generalized_binomial(t, k - 1) * factorial(k - 1)) / n_factorial;
    total = total + R(weight) * b;
  }
  return R(Rational(r)) * total;
}

template <RingElement R>
R convolution_closed(const BellSequenceSpec<R>& spec, int r, int n) {
  BellTriangle<R> bell(spec.scaled_arguments(std::max(n, 0)));
  return convolution_closed(spec, r, n, bell);
}

/// For the a = 0, b = 1 family with coefficients c:
///   sum_{k=0}^{m} binom(k+r-1, k) k!/m! B_{m,k}(1!c_1, ...),  m = n - delta r,
/// and 0 when m < 0.
template <RingElement R>
R shifted_convolution_closed(std::span<const R> c, int r, int n, int delta) {
  if (r < 1) throw std::invalid_argument("shifted_convolution_closed: r must be >= 1");
  if (n < 0 || delta < 0) throw std::invalid_argument("shifted_convolution_closed: n and delta must be non-negative");
  const int m = n - delta * r;
  if (m < 0) return R(Rational(0));
  const BellSequenceSpec<R> spec(0, 1, std::vector<R>(c.begin(), c.end()));
  const std::vector<R> xs = spec.scaled_arguments(m);
  const Rational m_factorial(factorial(m));
  R total(Rational(0));
  for (int k = 0; k <= m; ++k) {
    R b = bell_eval(m, k, std::span<const R>(xs));
    if (b.is_zero()) continue;
    const Rational weight = Rational(generalized_binomial(k + r - 1, k) * factorial(k)) / m_factorial;
    total = total + R(weight) * b;
  }
  return total;
}

template <RingElement R>
R shifted_convolution_closed(const std::vector<R>& c, int r, int n, int delta) {
  return shifted_convolution_closed(std::span<const R>(c), r, n, delta);
}

// Family-specific closed forms, each coded from its own formula rather than
// through convolution_closed.

/// r/(n+r) binom(2(n+r), n): r-fold convolution of C_{m+1}.
Rational catalan_convolution(int r, int n);
/// r/(n+r) sum_{k=0}^n binom(n+r, k) binom(k, n-k): r-fold convolution of M_m.
Rational motzkin_convolution(int r, int n);
/// r/(bn+r) binom(bn+r, n): r-fold convolution of the Fuss-Catalan numbers.
/// Throws undefined_form_error if bn + r = 0.
Rational fuss_catalan_convolution(std::int64_t b, int r, int n);
/// sum_{k=0}^{n-r} binom(k+r-1, k) binom(k, n-r-k): r-fold convolution of f_m.
Rational fibonacci_convolution(int r, int n);
/// sum_{k=0}^{n-2r} sum_l binom(k+r-1, k) binom(k, l) binom(l, n-2r-k-l).
Rational tribonacci_convolution(int r, int n);
/// sum_{k=0}^{n-r} binom(k+r-1, k) binom(k, n-r-k) (2x)^{n-r-k}.
Polynomial jacobsthal_convolution(int r, int n);

/// a = 1, b = 0, c = (c1, c2):
///   sum_{k=1}^n r/k binom(n+r-1, k-1) binom(k, n-k) c1^{2k-n} c2^{n-k},  n >= 1.
template <RingElement R>
R two_term_convolution(int r, int n, const R& c1, const R& c2) {
  if (r < 1 || n < 1) throw std::invalid_argument("two_term_convolution needs r >= 1 and n >= 1");
  R total(Rational(0));
  for (int k = 1; k <= n; ++k) {
    if (n - k > k) continue;  // binom(k, n-k) = 0
    const Rational weight =
        Rational(r) / Rational(k) * Rational(generalized_binomial(n + r - 1, k - 1) * generalized_binomial(k, n - k));
    total = total + R(weight) * power(c1, static_cast<unsigned>(2 * k - n)) * power(c2, static_cast<unsigned>(n - k));
  }
  return total;
}

/// a = 0, b = 1 with arbitrary c, unshifted:
///   sum_{k=1}^n binom(k+r-1, k) k!/n! B_{n,k}(1!c_1, ...),  n >= 1.
template <RingElement R>
R zero_one_convolution(const std::vector<R>& c, int r, int n) {
  if (r < 1 || n < 1) throw std::invalid_argument("zero_one_convolution needs r >= 1 and n >= 1");
  std::vector<R> xs;
  for (int j = 1; j <= n; ++j) {
    const R cj = j <= static_cast<int>(c.size()) ? c[static_cast<std::size_t>(j - 1)] : R(Rational(0));
    xs.push_back(R(Rational(factorial(j))) * cj);
  }
  const Rational n_factorial(factorial(n));
  R total(Rational(0));
  for (int k = 1; k <= n; ++k) {
    const Rational weight = Rational(generalized_binomial(k + r - 1, k) * factorial(k)) / n_factorial;
    total = total + R(weight) * bell_eval_recurrence(n, k, std::span<const R>(xs));
  }
  return total;
}

enum class ConvolutionFamily { zero_one, two_term, catalan, motzkin, fuss_catalan, fibonacci, tribonacci, jacobsthal };

/// Parameters consumed by the families that need them.
struct FamilyParameters {
  std::vector<Rational> c;  // zero_one
  Rational c1{0};           // two_term
  Rational c2{0};           // two_term
  std::int64_t b = 0;       // fuss_catalan
};

using SpecializedValue = std::variant<Rational, Polynomial>;

/// Dispatches to the family-specific closed form. Jacobsthal yields a
/// Polynomial, every other family a Rational.
SpecializedValue convolution_closed_specialized(ConvolutionFamily family, int r, int n,
                                                const FamilyParameters& params = {});

/// alpha(l, m) = p l + q m + s.
struct LinearForm {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::int64_t s = 0;
  std::int64_t operator()(std::int64_t l, std::int64_t m) const { return p * l + q * m + s; }
};

/// True when every denominator of the Bell convolution identity is nonzero for
/// this (alpha, tau, n, k).
bool lemma_admissible(const LinearForm& alpha, std::int64_t tau, int n, int k);

/// Evaluates both sides of
///   sum_{l=0}^k sum_{m=l}^n binom(A, k-l) binom(tau-A, l) binom(n, m)
///       / (A (tau-A) binom(k, l)) B_{m,l} B_{n-m,k-l}
///     = (tau - alpha(0,0) + alpha(k,n)) / (tau alpha(k,n) (tau - alpha(0,0))) binom(tau, k) B_{n,k},
/// A = alpha(l, m), over xs and compares them exactly. Throws
/// undefined_form_error naming the first (l, m) where a denominator vanishes.
template <RingElement R>
bool lemma_identity_check(const LinearForm& alpha, std::int64_t tau, int n, int k, std::span<const R> xs) {
  if (tau == 0) throw std::invalid_argument("lemma_identity_check: tau must be nonzero");
  if (n < 0 || k < 0 || k > n) throw std::invalid_argument("lemma_identity_check: need 0 <= k <= n");
  for (int l = 0; l <= k; ++l) {
    for (int m = l; m <= n; ++m) {
      const std::int64_t a = alpha(l, m);
      if (a == 0 || tau - a == 0) {
        throw undefined_form_error("lemma summand undefined at (l,m) = (" + std::to_string(l) + "," +
                                   std::to_string(m) + ")");
      }
    }
  }
  if (alpha(k, n) == 0 || tau - alpha(0, 0) == 0) throw undefined_form_error("lemma right-hand side undefined");

  // B_{j,i} for every 0 <= i <= j <= n.
  std::vector<std::vector<R>> bell(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i <= j; ++i) bell[j].push_back(bell_eval(j, i, xs));
  }
  auto bell_at = [&](int j, int i) -> R { return i <= j ? bell[j][i] : R(Rational(0)); };

  R lhs(Rational(0));
  for (int l = 0; l <= k; ++l) {
    for (int m = l; m <= n; ++m) {
      const R product = bell_at(m, l) * bell_at(n - m, k - l);
      if (product.is_zero()) continue;
      const std::int64_t a = alpha(l, m);
      const Rational numerator(generalized_binomial(a, k - l) * generalized_binomial(tau - a, l) *
                               generalized_binomial(n, m));
      const Rational denominator(Integer(a) * (tau - a) * generalized_binomial(k, l));
      lhs = lhs + R(numerator / denominator) * product;
    }
  }
  const std::int64_t a00 = alpha(0, 0);
  const std::int64_t akn = alpha(k, n);
  const Rational scale = Rational(tau - a00 + akn) / (Rational(tau) * Rational(akn) * Rational(tau - a00)) *
                         Rational(generalized_binomial(tau, k));
  const R rhs = R(scale) * bell_at(n, k);
  return lhs == rhs;
}

template <RingElement R>
bool lemma_identity_check(const LinearForm& alpha, std::int64_t tau, int n, int k, const std::vector<R>& xs) {
  return lemma_identity_check(alpha, tau, n, k, std::span<const R>(xs));
}

/// One report per (r, n) in [1, r_max] x [1, n_max], ordered by r then n.
/// Mismatches are reported, never thrown.
template <RingElement R>
std::vector<ConvolutionReport<R>> verify_theorem(const BellSequenceSpec<R>& spec, int r_max, int n_max) {
  if (r_max < 1 || n_max < 1) throw std::invalid_argument("verify_theorem needs r_max >= 1 and n_max >= 1");
  const SequenceWindow<R> window = bell_transform(spec, n_max);
  BellTriangle<R> bell(spec.scaled_arguments(n_max));
  std::vector<ConvolutionReport<R>> reports;
  for (int r = 1; r <= r_max; ++r) {
    for (int n = 1; n <= n_max; ++n) {
      R lhs = convolution_oracle(window, r, n);
      R rhs = convolution_closed(spec, r, n, bell);
      const bool matched = lhs == rhs;
      reports.push_back(ConvolutionReport<R>{r, n, std::move(lhs), std::move(rhs), matched});
    }
  }
  return reports;
}

}  // namespace bellseq
