#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bellseq/ring.hpp"

namespace bellseq {

// Grammar accepted for ring elements (whitespace ignored):
//
//   element := '(' sum ')' | sum
//   sum     := ['+'|'-'] term { ('+'|'-') term }
//   term    := coeff | [coeff] 'x' ['^' digits]
//   coeff   := digits ['/' digits]
//
// so `3`, `-1/2`, `2x`, `x^3`, `(1+2x)` and every string produced by
// Rational::to_string / Polynomial::to_string are accepted. Malformed input
// throws std::invalid_argument.

Polynomial parse_polynomial(std::string_view text);

/// As parse_polynomial, but rejects any text mentioning `x`.
Rational parse_rational(std::string_view text);

/// Splits on commas that are not inside parentheses. An empty input yields an
/// empty list; an empty item is an error.
std::vector<std::string> split_list(std::string_view text);

/// True when any item of the list involves the indeterminate.
bool mentions_indeterminate(const std::vector<std::string>& items);

}  // namespace bellseq
