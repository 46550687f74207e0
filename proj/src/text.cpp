#include "bellseq/text.hpp"

#include <cctype>
#include <stdexcept>

namespace bellseq {
namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) {
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) text_ += ch;
    }
  }

  bool done() const { return pos_ == text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  bool accept(char ch) {
    if (peek() != ch) return false;
    ++pos_;
    return true;
  }
  bool at_digit() const { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  std::string digits() {
    std::string out;
    while (at_digit()) out += text_[pos_++];
    if (out.empty()) fail("expected digits");
    return out;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse '" + text_ + "': " + what + " at offset " + std::to_string(pos_));
  }

  const std::string& text() const { return text_; }

 private:
  std::string text_;
  std::size_t pos_ = 0;
};

Polynomial parse_term(Cursor& in) {
  Rational coeff(1);
  bool has_coeff = false;
  if (in.at_digit()) {
    Integer num(in.digits());
    Integer den(1);
    if (in.accept('/')) {
      den = Integer(in.digits());
      if (den.is_zero()) in.fail("zero denominator");
    }
    coeff = Rational(num, den);
    has_coeff = true;
  }
  if (in.accept('x')) {
    unsigned power = 1;
    if (in.accept('^')) {
      const std::string exp = in.digits();
      if (exp.size() > 6) in.fail("exponent too large");
      power = static_cast<unsigned>(std::stoul(exp));
    }
    return Polynomial::monomial(coeff, power);
  }
  if (!has_coeff) in.fail("expected a number or x");
  return Polynomial(coeff);
}

Polynomial parse_sum(Cursor& in) {
  Polynomial acc;
  bool first = true;
  while (true) {
    bool negative = false;
    if (in.accept('-')) {
      negative = true;
    } else if (!in.accept('+') && !first) {
      break;
    }
    Polynomial term = parse_term(in);
    acc += negative ? -term : term;
    first = false;
  }
  return acc;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text) {
  Cursor in(text);
  if (in.done()) in.fail("empty element");
  Polynomial value;
  if (in.accept('(')) {
    value = parse_sum(in);
    if (!in.accept(')')) in.fail("expected ')'");
  } else {
    value = parse_sum(in);
  }
  if (!in.done()) in.fail("unexpected character");
  return value;
}

Rational parse_rational(std::string_view text) {
  if (text.find('x') != std::string_view::npos) {
    throw std::invalid_argument("cannot parse '" + std::string(text) + "': expected a rational, found x");
  }
  return parse_polynomial(text).coefficient(0);
}

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> items;
  if (text.find_first_not_of(" \t") == std::string_view::npos) return items;
  std::string current;
  int depth = 0;
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth < 0) throw std::invalid_argument("unbalanced parentheses in list '" + std::string(text) + "'");
    if (ch == ',' && depth == 0) {
      items.push_back(current);
      current.clear();
    } else {
      current += ch;
    }
  }
  if (depth != 0) throw std::invalid_argument("unbalanced parentheses in list '" + std::string(text) + "'");
  items.push_back(current);
  for (const auto& item : items) {
    if (item.find_first_not_of(" \t") == std::string::npos) {
      throw std::invalid_argument("empty item in list '" + std::string(text) + "'");
    }
  }
  return items;
}

bool mentions_indeterminate(const std::vector<std::string>& items) {
  for (const auto& item : items) {
    if (item.find('x') != std::string::npos) return true;
  }
  return false;
}

}  // namespace bellseq
