#include <cctype>
#include <sstream>

#include "egs/rings.hpp"

namespace egs {

namespace {

constexpr unsigned long kMaxExponent = 100000;

class Parser {
 public:
  Parser(std::string_view text, const RingDescriptor& ring) : text_(text), ring_(ring) {}

  RingElement parse() {
    RingElement e = expr();
    skip_ws();
    if (pos_ < text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  RingElement expr() {
    RingElement acc = term();
    for (;;) {
      const char c = peek();
      if (c == '+') {
        ++pos_;
        acc += term();
      } else if (c == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  RingElement term() {
    RingElement acc = factor();
    while (peek() == '*') {
      ++pos_;
      acc *= factor();
    }
    return acc;
  }

  RingElement factor() {
    RingElement b = base();
    if (peek() != '^') return b;
    ++pos_;
    const char c = peek();
    if (c == '-') fail("negative exponent");
    if (c == '(') {
      const std::size_t save = pos_;
      ++pos_;
      if (peek() == '-') fail("negative exponent");
      pos_ = save;
      fail("exponent must be a nonnegative integer literal");
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) fail("expected exponent");
    const mpz_class e = digits();
    if (e > kMaxExponent) fail("exponent too large");
    return pow(b, e.get_ui());
  }

  mpz_class digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  RingElement base() {
    const char c = peek();
    if (c == '\0') fail("unexpected end of input");
    if (c == '(') {
      ++pos_;
      RingElement e = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return e;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      mpz_class num = digits();
      if (peek() == '/') {
        ++pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
        mpz_class den = digits();
        if (den == 0) fail("zero denominator");
        if (ring_.base() == BaseRing::integers) {
          pos_ = start;
          fail("rational literal in an integer-based ring");
        }
        mpq_class q(num, den);
        q.canonicalize();
        return RingElement::constant(ring_, q);
      }
      return RingElement::constant(ring_, mpq_class(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      auto idx = ring_.variable_index(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + std::string(name) + "'");
      }
      return RingElement::variable(ring_, *idx);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  const RingDescriptor& ring_;
  std::size_t pos_ = 0;
};

std::string format_rational(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace

RingElement parse_element(std::string_view text, const RingDescriptor& ring) { return Parser(text, ring).parse(); }

std::string format_element(const RingElement& a) {
  const auto terms = a.terms();
  if (terms.empty()) return "0";
  const auto vars = a.ring().variables();
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    const bool negative = sgn(t.coefficient) < 0;
    const mpq_class mag = abs(t.coefficient);
    if (negative) os << '-';
    else if (!first) os << '+';
    first = false;

    std::string monomial;
    for (std::size_t i = 0; i < t.exponents.size(); ++i) {
      if (t.exponents[i] == 0) continue;
      if (!monomial.empty()) monomial += '*';
      monomial += vars[i];
      if (t.exponents[i] > 1) monomial += '^' + std::to_string(t.exponents[i]);
    }
    if (monomial.empty()) {
      os << format_rational(mag);
    } else if (mag == 1) {
      os << monomial;
    } else {
      os << format_rational(mag) << '*' << monomial;
    }
  }
  return os.str();
}

}  // namespace egs
