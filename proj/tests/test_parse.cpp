#include <catch2/catch_amalgamated.hpp>

#include "sturmint/parse.hpp"
#include "support/generators.hpp"

using sturmint::ParseError;
using sturmint::parse_poly;
using sturmint::parse_rational;
using sturmint::Polynomial;
using sturmint::Rational;
namespace st = sturmint::testing;

TEST_CASE("parse_poly worked examples") {
  CHECK(parse_poly("x^2 - 1") == Polynomial{Rational(-1), Rational(0), Rational(1)});
  CHECK(parse_poly("(x-1)^2*(x+2)") ==
        Polynomial{Rational(2), Rational(-3), Rational(0), Rational(1)});
  CHECK(parse_poly("3/2*x + 1/3") == Polynomial{Rational(1, 3), Rational(3, 2)});
}

TEST_CASE("parse_poly grammar corners") {
  CHECK(parse_poly("0") == Polynomial{});
  CHECK(parse_poly("x") == Polynomial{Rational(0), Rational(1)});
  CHECK(parse_poly("-x") == Polynomial{Rational(0), Rational(-1)});
  CHECK(parse_poly("-x^2 + x") == Polynomial{Rational(0), Rational(1), Rational(-1)});
  CHECK(parse_poly("x^0") == Polynomial::constant(Rational(1)));
  CHECK(parse_poly("2^3") == Polynomial::constant(Rational(8)));
  CHECK(parse_poly(" ( x + 1 ) * ( x - 1 ) ") ==
        Polynomial{Rational(-1), Rational(0), Rational(1)});
  CHECK(parse_poly("x*x*x - x") == Polynomial{Rational(0), Rational(-1), Rational(0), Rational(1)});
  CHECK(parse_poly("123456789012345678901234567890*x").coeff(1) ==
        Rational(mpz_class("123456789012345678901234567890")));
}

TEST_CASE("parse_poly errors carry positions") {
  CHECK_THROWS_AS(parse_poly(""), ParseError);
  CHECK_THROWS_AS(parse_poly("x +"), ParseError);
  CHECK_THROWS_AS(parse_poly("(x + 1"), ParseError);
  CHECK_THROWS_AS(parse_poly("x^-1"), ParseError);
  CHECK_THROWS_AS(parse_poly("x/2"), ParseError);
  CHECK_THROWS_AS(parse_poly("y"), ParseError);
  CHECK_THROWS_AS(parse_poly("x^999999999"), ParseError);

  try {
    parse_poly("3x");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);  // implicit multiplication is not in the grammar
  }
  try {
    parse_poly("1/0*x");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("division by zero") != std::string::npos);
  }
}

TEST_CASE("format and parse round-trip on random polynomials") {
  st::Rng rng(601);
  for (int i = 0; i < 300; ++i) {
    const int deg = static_cast<int>(rng.integer(0, 9));
    Polynomial p = rng.chance(0.1) ? Polynomial{} : rng.polynomial(deg, 30, 12);
    const std::string text = to_string(p);
    CHECK(parse_poly(text) == p);
    // formatting the reparsed value is stable
    CHECK(to_string(parse_poly(text)) == text);
  }
}

TEST_CASE("random expression trees parse to the value they denote") {
  st::Rng rng(602);
  // build expression text and the expected polynomial side by side
  for (int iter = 0; iter < 200; ++iter) {
    std::string text;
    Polynomial expected = Polynomial::constant(Rational(0));
    const int terms = static_cast<int>(rng.integer(1, 4));
    for (int t = 0; t < terms; ++t) {
      const bool minus = t > 0 && rng.chance(0.5);
      if (t > 0) text += minus ? " - " : " + ";
      std::string factor_text;
      Polynomial factor = Polynomial::constant(Rational(1));
      const int nfactors = static_cast<int>(rng.integer(1, 3));
      for (int u = 0; u < nfactors; ++u) {
        if (u > 0) factor_text += "*";
        switch (rng.integer(0, 2)) {
          case 0: {
            const long num = rng.integer(0, 20);
            const long den = rng.integer(1, 9);
            factor_text += std::to_string(num) + "/" + std::to_string(den);
            factor = factor * Polynomial::constant(Rational(num, den));
            break;
          }
          case 1: {
            const unsigned e = static_cast<unsigned>(rng.integer(1, 4));
            factor_text += "x^" + std::to_string(e);
            factor = factor * pow(Polynomial{Rational(0), Rational(1)}, e);
            break;
          }
          default: {
            const long c = rng.integer(1, 9);
            const unsigned e = static_cast<unsigned>(rng.integer(1, 3));
            factor_text += "(x + " + std::to_string(c) + ")^" + std::to_string(e);
            factor = factor * pow(Polynomial{Rational(c), Rational(1)}, e);
            break;
          }
        }
      }
      text += factor_text;
      expected = minus ? expected - factor : expected + factor;
    }
    CAPTURE(text);
    const Polynomial parsed = parse_poly(text);
    REQUIRE(parsed == expected);
    REQUIRE(parse_poly(to_string(parsed)) == parsed);
  }
}

TEST_CASE("parse_rational") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational(" 0 ") == Rational(0));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
}
