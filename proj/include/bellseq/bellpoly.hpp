#pragma once

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bellseq/ring.hpp"

namespace bellseq {

/// An exponent vector (alpha_1, ..., alpha_{n-k+1}) with
/// sum(alpha_i) = k and sum(i * alpha_i) = n.
class MultiIndex {
 public:
  /// Throws std::invalid_argument if the constraints do not hold.
  MultiIndex(int n, int k, std::vector<int> exponents);

  int n() const { return n_; }
  int k() const { return k_; }
  const std::vector<int>& exponents() const { return exponents_; }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
  int n_;
  int k_;
  std::vector<int> exponents_;
};

/// All multi-indices in pi(n, k), in descending lexicographic order of the
/// exponent vector. Empty when k > n.
std::vector<MultiIndex> enumerate_pi(int n, int k);

struct BellTerm {
  Integer coefficient;
  MultiIndex index;
};

/// B_{n,k} as a list of monomials with positive integer coefficients.
class SymbolicBellPolynomial {
 public:
  SymbolicBellPolynomial(int n, int k, std::vector<BellTerm> terms)
      : n_(n), k_(k), terms_(std::move(terms)) {}

  int n() const { return n_; }
  int k() const { return k_; }
  const std::vector<BellTerm>& terms() const& { return terms_; }
  std::vector<BellTerm> terms() && { return std::move(terms_); }

  /// `4*x1*x3 + 3*x2^2`; `0` when there are no terms, `1` for B_{0,0}.
  std::string to_string() const;

  template <RingElement R>
  R evaluate(std::span<const R> xs) const;

 private:
  int n_;
  int k_;
  std::vector<BellTerm> terms_;
};

SymbolicBellPolynomial bell_symbolic(int n, int k);

namespace detail {

inline void check_bell_arguments(int n, int k, std::size_t available) {
  if (n < 0 || k < 0) throw std::invalid_argument("Bell polynomial indices must be non-negative");
  if (k > n) return;
  const auto needed = static_cast<std::size_t>(n - k + 1);
  if (available < needed) {
    throw std::invalid_argument("B_{" + std::to_string(n) + "," + std::to_string(k) + "} needs " +
                                std::to_string(needed) + " arguments, got " + std::to_string(available));
  }
}

}  // namespace detail

template <RingElement R>
R SymbolicBellPolynomial::evaluate(std::span<const R> xs) const {
  detail::check_bell_arguments(n_, k_, xs.size());
  R total(Rational(0));
  for (const auto& term : terms_) {
    R monomial(Rational(term.coefficient));
    const auto& exps = term.index.exponents();
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] != 0) monomial = monomial * power(xs[i], static_cast<unsigned>(exps[i]));
    }
    total = total + monomial;
  }
  return total;
}

/// B_{n,k}(xs) by summing over pi(n, k). Arguments past position n-k+1 are
/// ignored; fewer than n-k+1 arguments throws std::invalid_argument.
template <RingElement R>
R bell_eval(int n, int k, std::span<const R> xs) {
  detail::check_bell_arguments(n, k, xs.size());
  if (k > n) return R(Rational(0));
  return bell_symbolic(n, k).evaluate(xs);
}

template <RingElement R>
R bell_eval(int n, int k, const std::vector<R>& xs) {
  return bell_eval(n, k, std::span<const R>(xs));
}

/// B_{n,k}(xs) through the triangle recurrence
///   B_{n,k} = sum_{i=1}^{n-k+1} binom(n-1, i-1) x_i B_{n-i,k-1}.
/// Same contract as bell_eval; kept independent of it for cross-checking.
template <RingElement R>
R bell_eval_recurrence(int n, int k, std::span<const R> xs) {
  detail::check_bell_arguments(n, k, xs.size());
  const R zero(Rational(0));
  if (k > n) return zero;
  if (k == 0) return n == 0 ? R(Rational(1)) : zero;
  const int width = n - k;  // every reachable cell (m, j) has m - j <= width
  // table[j][d] = B_{j+d, j}
  std::vector<std::vector<R>> table(k + 1, std::vector<R>(width + 1, zero));
  table[0][0] = R(Rational(1));
  for (int j = 1; j <= k; ++j) {
    for (int d = 0; d <= width; ++d) {
      const int m = j + d;
      R acc = zero;
      for (int i = 1; i <= d + 1; ++i) {
        const int prev_d = m - i - (j - 1);
        if (prev_d < 0 || prev_d > width) continue;
        const R& prev = table[j - 1][prev_d];
        if (prev.is_zero() || xs[i - 1].is_zero()) continue;
        acc = acc + R(Rational(generalized_binomial(m - 1, i - 1))) * xs[i - 1] * prev;
      }
      table[j][d] = std::move(acc);
    }
  }
  return table[k][width];
}

template <RingElement R>
R bell_eval_recurrence(int n, int k, const std::vector<R>& xs) {
  return bell_eval_recurrence(n, k, std::span<const R>(xs));
}

/// Caller-owned memo of B_{n,k} over one fixed argument list. Not shared.
template <RingElement R>
class BellTriangle {
 public:
  explicit BellTriangle(std::vector<R> xs) : xs_(std::move(xs)) {}

  const std::vector<R>& arguments() const { return xs_; }

  const R& operator()(int n, int k) {
    auto key = std::make_pair(n, k);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, bell_eval(n, k, std::span<const R>(xs_))).first;
    return it->second;
  }

 private:
  std::vector<R> xs_;
  std::map<std::pair<int, int>, R> cache_;
};

/// B_{n,k}(c1, 2 c2, 0, ...) = n!/k! binom(k, n-k) c1^{2k-n} c2^{n-k};
/// zero whenever n - k > k.
template <RingElement R>
R bell_closed_two_term(int n, int k, const R& c1, const R& c2) {
  if (n < 0 || k < 0) throw std::invalid_argument("Bell polynomial indices must be non-negative");
  if (k > n || n - k > k) return R(Rational(0));
  const Rational scale = Rational(factorial(n)) / Rational(factorial(k)) * Rational(generalized_binomial(k, n - k));
  return R(scale) * power(c1, static_cast<unsigned>(2 * k - n)) * power(c2, static_cast<unsigned>(n - k));
}

/// sum_l binom(k, l) binom(l, n-k-l), which equals (k!/n!) B_{n,k}(1!, 2!, 3!, 0, ...).
Integer bell_closed_three_term(int n, int k);

}  // namespace bellseq
