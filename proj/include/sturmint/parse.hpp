#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

#include "sturmint/polynomial.hpp"

namespace sturmint {

/// Syntax error with the 1-based character position where parsing failed.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}

  size_t position() const { return position_; }

 private:
  size_t position_;
};

namespace detail {

// Recursive-descent parser for polynomial expressions in x:
//
//   expr    := term (('+'|'-') term)*
//   term    := factor ('*' factor)*
//   factor  := '-' factor | primary ('^' integer)?
//   primary := 'x' | number | '(' expr ')'
//   number  := integer ('/' integer)?
//
// Implicit multiplication is not part of the grammar: write 3*x, not 3x.
class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ < text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_ + 1); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Polynomial expr() {
    Polynomial p = term();
    while (true) {
      if (accept('+'))
        p = p + term();
      else if (accept('-'))
        p = p - term();
      else
        return p;
    }
  }

  Polynomial term() {
    Polynomial p = factor();
    while (accept('*')) p = p * factor();
    return p;
  }

  Polynomial factor() {
    if (accept('-')) return -factor();
    Polynomial p = primary();
    if (accept('^')) {
      skip_ws();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("expected a nonnegative integer exponent");
      const unsigned long e = small_uint();
      p = pow(p, static_cast<unsigned>(e));
    }
    return p;
  }

  Polynomial primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == 'x') {
      ++pos_;
      return Polynomial{Rational(0), Rational(1)};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::constant(number());
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    fail("expected 'x', a number or '('");
  }

  Rational number() {
    mpz_class num = integer();
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("expected an integer denominator");
      mpz_class den = integer();
      if (den == 0) fail("division by zero in rational literal");
      return Rational(std::move(num), std::move(den));
    }
    return Rational(std::move(num));
  }

  mpz_class integer() {
    const size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
  }

  unsigned long small_uint() {
    const size_t start = pos_;
    mpz_class v = integer();
    if (!v.fits_ulong_p() || v.get_ui() > 1024) {
      pos_ = start;
      fail("exponent too large");
    }
    return v.get_ui();
  }

  std::string_view text_;
  size_t pos_ = 0;
};

}  // namespace detail

/// Parses a polynomial expression over +, -, *, ^, parentheses, the variable
/// x, and integer or p/q rational literals.
inline Polynomial parse_poly(std::string_view text) { return detail::PolyParser(text).parse(); }

/// Parses a standalone rational literal: an optional leading '-', an
/// integer, and an optional /denominator.
inline Rational parse_rational(std::string_view text) {
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto integer = [&]() -> mpz_class {
    skip_ws();
    const size_t start = pos;
    if (pos < text.size() && text[pos] == '-') ++pos;
    const size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) throw ParseError("expected an integer", pos + 1);
    return mpz_class(std::string(text.substr(start, pos - start)), 10);
  };
  mpz_class num = integer();
  skip_ws();
  mpz_class den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    skip_ws();
    const size_t dstart = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == dstart) throw ParseError("expected an integer denominator", pos + 1);
    den = mpz_class(std::string(text.substr(dstart, pos - dstart)), 10);
    if (den == 0) throw ParseError("division by zero in rational literal", dstart + 1);
  }
  skip_ws();
  if (pos < text.size())
    throw ParseError("unexpected character '" + std::string(1, text[pos]) + "'", pos + 1);
  return Rational(std::move(num), std::move(den));
}

}  // namespace sturmint
