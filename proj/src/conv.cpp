#include "bellseq/conv.hpp"

namespace bellseq {

CompositionOdometer::CompositionOdometer(int parts, int total) {
  if (parts < 1 || total < 0) throw std::invalid_argument("CompositionOdometer: need parts >= 1 and total >= 0");
  parts_.assign(static_cast<std::size_t>(parts), 0);
  parts_.back() = total;
}

bool CompositionOdometer::next() {
  // Rightmost nonzero part after the first; everything left of it stays, it
  // moves one unit to its left neighbour and the rest collects at the end.
  std::size_t j = parts_.size() - 1;
  while (j >= 1 && parts_[j] == 0) --j;
  if (j == 0) return false;
  int rest = 0;
  for (std::size_t i = j; i < parts_.size(); ++i) {
    rest += parts_[i];
    parts_[i] = 0;
  }
  ++parts_[j - 1];
  parts_.back() = rest - 1;
  return true;
}

namespace {

void require_positive(int r, int n) {
  if (r < 1) throw std::invalid_argument("convolution: r must be >= 1");
  if (n < 0) throw std::invalid_argument("convolution: n must be non-negative");
}

}  // namespace

Rational catalan_convolution(int r, int n) {
  require_positive(r, n);
  return Rational(r) / Rational(n + r) * Rational(generalized_binomial(2 * (n + r), n));
}

Rational motzkin_convolution(int r, int n) {
  require_positive(r, n);
  Integer total = 0;
  for (int k = 0; k <= n; ++k) total += generalized_binomial(n + r, k) * binomial_or_zero(k, n - k);
  return Rational(r) / Rational(n + r) * Rational(total);
}

Rational fuss_catalan_convolution(std::int64_t b, int r, int n) {
  require_positive(r, n);
  const std::int64_t top = b * n + r;
  if (top == 0) throw undefined_form_error("Fuss-Catalan convolution undefined: bn + r = 0");
  return Rational(r) / Rational(top) * Rational(generalized_binomial(top, n));
}

Rational fibonacci_convolution(int r, int n) {
  require_positive(r, n);
  Integer total = 0;
  for (int k = 0; k <= n - r; ++k) total += generalized_binomial(k + r - 1, k) * binomial_or_zero(k, n - r - k);
  return Rational(total);
}

Rational tribonacci_convolution(int r, int n) {
  require_positive(r, n);
  Integer total = 0;
  for (int k = 0; k <= n - 2 * r; ++k) {
    const Integer outer = generalized_binomial(k + r - 1, k);
    for (int l = 0; l <= k; ++l) {
      total += outer * generalized_binomial(k, l) * binomial_or_zero(l, n - 2 * r - k - l);
    }
  }
  return Rational(total);
}

Polynomial jacobsthal_convolution(int r, int n) {
  require_positive(r, n);
  Polynomial total;
  for (int k = 0; k <= n - r; ++k) {
    const Integer coeff = generalized_binomial(k + r - 1, k) * binomial_or_zero(k, n - r - k);
    if (coeff.is_zero()) continue;
    const unsigned deg = static_cast<unsigned>(n - r - k);
    // (2x)^deg
    total += Polynomial::monomial(Rational(coeff * (Integer(1) << deg)), deg);
  }
  return total;
}

SpecializedValue convolution_closed_specialized(ConvolutionFamily family, int r, int n,
                                                const FamilyParameters& params) {
  switch (family) {
    case ConvolutionFamily::zero_one:
      return zero_one_convolution(params.c, r, n);
    case ConvolutionFamily::two_term:
      return two_term_convolution(r, n, params.c1, params.c2);
    case ConvolutionFamily::catalan:
      return catalan_convolution(r, n);
    case ConvolutionFamily::motzkin:
      return motzkin_convolution(r, n);
    case ConvolutionFamily::fuss_catalan:
      return fuss_catalan_convolution(params.b, r, n);
    case ConvolutionFamily::fibonacci:
      return fibonacci_convolution(r, n);
    case ConvolutionFamily::tribonacci:
      return tribonacci_convolution(r, n);
    case ConvolutionFamily::jacobsthal:
      return jacobsthal_convolution(r, n);
  }
  throw std::invalid_argument("unknown convolution family");
}

bool lemma_admissible(const LinearForm& alpha, std::int64_t tau, int n, int k) {
  if (tau == 0 || n < 0 || k < 0 || k > n) return false;
  for (int l = 0; l <= k; ++l) {
    for (int m = l; m <= n; ++m) {
      const std::int64_t a = alpha(l, m);
      if (a == 0 || tau - a == 0) return false;
    }
  }
  return alpha(k, n) != 0 && tau - alpha(0, 0) != 0;
}

}  // namespace bellseq
