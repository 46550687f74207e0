#include "bellseq/bellpoly.hpp"

#include <numeric>

namespace bellseq {

MultiIndex::MultiIndex(int n, int k, std::vector<int> exponents) : n_(n), k_(k), exponents_(std::move(exponents)) {
  if (n < 0 || k < 0 || k > n) throw std::invalid_argument("MultiIndex: need 0 <= k <= n");
  if (exponents_.size() != static_cast<std::size_t>(n - k + 1)) {
    throw std::invalid_argument("MultiIndex: exponent vector must have length n-k+1");
  }
  long parts = 0;
  long weight = 0;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] < 0) throw std::invalid_argument("MultiIndex: negative exponent");
    parts += exponents_[i];
    weight += static_cast<long>(i + 1) * exponents_[i];
  }
  if (parts != k || weight != n) throw std::invalid_argument("MultiIndex: exponents violate the pi(n,k) constraints");
}

namespace {

// Fills positions [pos, length) of `alpha` with `parts` remaining parts of
// total size `size`, largest alpha at each position first.
void fill_pi(int n, int k, std::vector<int>& alpha, std::size_t pos, int parts, int size,
             std::vector<MultiIndex>& out) {
  const int length = static_cast<int>(alpha.size());
  const int part_size = static_cast<int>(pos) + 1;
  if (part_size == length) {
    if (parts * part_size == size) {
      alpha[pos] = parts;
      out.emplace_back(n, k, alpha);
      alpha[pos] = 0;
    }
    return;
  }
  for (int count = std::min(parts, size / part_size); count >= 0; --count) {
    const int rest_parts = parts - count;
    const int rest_size = size - count * part_size;
    // Remaining parts all have size in [part_size + 1, length].
    if (rest_size < rest_parts * (part_size + 1) || rest_size > rest_parts * length) continue;
    alpha[pos] = count;
    fill_pi(n, k, alpha, pos + 1, rest_parts, rest_size, out);
  }
  alpha[pos] = 0;
}

}  // namespace

std::vector<MultiIndex> enumerate_pi(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("enumerate_pi: indices must be non-negative");
  std::vector<MultiIndex> out;
  if (k > n) return out;
  std::vector<int> alpha(static_cast<std::size_t>(n - k + 1), 0);
  fill_pi(n, k, alpha, 0, k, n, out);
  return out;
}

SymbolicBellPolynomial bell_symbolic(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("bell_symbolic: indices must be non-negative");
  const Integer n_factorial = factorial(n);
  std::vector<BellTerm> terms;
  for (auto& index : enumerate_pi(n, k)) {
    Integer denominator = 1;
    const auto& exps = index.exponents();
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      const Integer block = factorial(static_cast<std::int64_t>(i) + 1);
      denominator *= factorial(exps[i]);
      for (int rep = 0; rep < exps[i]; ++rep) denominator *= block;
    }
    terms.push_back(BellTerm{n_factorial / denominator, std::move(index)});
  }
  return SymbolicBellPolynomial(n, k, std::move(terms));
}

std::string SymbolicBellPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& term : terms_) {
    std::string factors;
    const auto& exps = term.index.exponents();
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += "x" + std::to_string(i + 1);
      if (exps[i] != 1) factors += "^" + std::to_string(exps[i]);
    }
    std::string rendered;
    if (factors.empty()) {
      rendered = term.coefficient.str();
    } else if (term.coefficient == 1) {
      rendered = factors;
    } else {
      rendered = term.coefficient.str() + "*" + factors;
    }
    if (!out.empty()) out += " + ";
    out += rendered;
  }
  return out;
}

Integer bell_closed_three_term(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("bell_closed_three_term: indices must be non-negative");
  Integer total = 0;
  for (int l = 0; l <= k; ++l) total += generalized_binomial(k, l) * binomial_or_zero(l, n - k - l);
  return total;
}

}  // namespace bellseq
