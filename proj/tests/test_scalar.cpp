#include <doctest.h>

#include <cstdlib>

#include "helpers.hpp"
#include "walkbound/errors.hpp"
#include "walkbound/scalar.hpp"

using namespace walkbound;
using testutil::thrown_code;

TEST_CASE("rational scalars normalize and print canonically") {
  CHECK(Scalar(Rational(6, 8)).str() == "3/4");
  CHECK(Scalar(Rational(-6, 8)).str() == "-3/4");
  CHECK((Scalar(4) / Scalar(2)).str() == "2");
  CHECK(Scalar(0).str() == "0");
  CHECK(Scalar(-7).str() == "-7");
  CHECK((Scalar(1) / Scalar(3) + Scalar(1) / Scalar(6)).str() == "1/2");
}

TEST_CASE("arithmetic stays exact in rational mode") {
  Scalar x = Scalar(1) / Scalar(3);
  Scalar acc(0);
  for (int i = 0; i < 3000; ++i) acc += x;
  CHECK(acc == Scalar(1000));
  CHECK(acc.mode() == ArithMode::rational);
  CHECK((Scalar(2) - Scalar(5)) == Scalar(-3));
  CHECK(abs(Scalar(-3)) == Scalar(3));
}

TEST_CASE("floating operands contaminate the result mode") {
  Scalar r = Scalar(1) / Scalar(2);
  Scalar f = Scalar::floating(0.5);
  CHECK((r + f).mode() == ArithMode::floating);
  CHECK((f * r).mode() == ArithMode::floating);
  CHECK((r + f).to_double() == 1.0);
}

TEST_CASE("mixed-mode comparisons are exact, not rounded") {
  CHECK(Scalar::floating(0.5) == Scalar(Rational(1, 2)));
  // 0.1 as a double is a dyadic rational slightly above 1/10.
  CHECK(Scalar::floating(0.1) != Scalar(Rational(1, 10)));
  CHECK(Scalar::floating(0.1) > Scalar(Rational(1, 10)));
  // A rational beyond double precision still compares correctly.
  Rational tiny = Rational(1, BigInt(1) << 80);
  CHECK(Scalar(tiny) > Scalar::floating(0.0));
  CHECK(Scalar(Rational(1, 2)) + Scalar(tiny) > Scalar::floating(0.5));
}

TEST_CASE("exact_from_double is the dyadic lift") {
  CHECK(Scalar::exact_from_double(0.5).str() == "1/2");
  CHECK(Scalar::exact_from_double(-0.75).str() == "-3/4");
  CHECK(Scalar::exact_from_double(3.0).str() == "3");
  double x = 0.1;
  CHECK(Scalar::exact_from_double(x).to_double() == x);
  CHECK(thrown_code([] { Scalar::exact_from_double(1.0 / 0.0); }) == Errc::invalid_argument);
  CHECK(thrown_code([] { Scalar::exact_from_double(0.0 / 0.0); }) == Errc::invalid_argument);
}

TEST_CASE("converted changes the tag, preserving value where possible") {
  CHECK(Scalar::floating(0.25).converted(ArithMode::rational) == Scalar(Rational(1, 4)));
  CHECK(Scalar(Rational(1, 4)).converted(ArithMode::floating).to_double() == 0.25);
  CHECK(Scalar(Rational(1, 3)).converted(ArithMode::floating).mode() == ArithMode::floating);
  CHECK(Scalar(5).converted(ArithMode::rational) == Scalar(5));
}

TEST_CASE("rational division by zero fails, floating division does not") {
  CHECK(thrown_code([] { Scalar(1) / Scalar(0); }) == Errc::invalid_argument);
  Scalar inf = Scalar::floating(1.0) / Scalar::floating(0.0);
  CHECK(inf.mode() == ArithMode::floating);
}

TEST_CASE("pow by squaring matches repeated multiplication") {
  CHECK(pow(Scalar(Rational(3, 2)), 4) == Scalar(Rational(81, 16)));
  CHECK(pow(Scalar(7), 0) == Scalar(1));
  CHECK(pow(Scalar(2), 62) == Scalar(Rational(BigInt(1) << 62)));
  CHECK(pow(Scalar::floating(2.0), 10).to_double() == 1024.0);
}

TEST_CASE("parse_scalar handles integers, fractions, and decimals") {
  bool forced = false;
  CHECK(parse_scalar("7", &forced) == Scalar(7));
  CHECK_FALSE(forced);
  CHECK(parse_scalar("-12") == Scalar(-12));
  CHECK(parse_scalar("3/4") == Scalar(Rational(3, 4)));
  CHECK(parse_scalar("-6/8") == Scalar(Rational(-3, 4)));

  CHECK(parse_scalar("0.5", &forced) == Scalar::floating(0.5));
  CHECK(forced);
  forced = false;
  CHECK(parse_scalar("1e3", &forced).to_double() == 1000.0);
  CHECK(forced);
}

TEST_CASE("parse_scalar rejects malformed tokens") {
  for (const char* bad : {"", "abc", "7/0", "1/2/3", "1.5x", "--3", "/4", "3/", "nan", "inf"})
    CHECK_MESSAGE(thrown_code([bad] { parse_scalar(bad); }) == Errc::malformed_line, bad);
}

TEST_CASE("format_double round-trips through strtod") {
  for (double x : {0.1, 1.0 / 3.0, 12345.6789e-3, 7.0, 1e-300}) {
    std::string s = format_double(x);
    CHECK(std::strtod(s.c_str(), nullptr) == x);
  }
}

TEST_CASE("mode names round-trip") {
  CHECK(arith_mode_from_name("rational") == ArithMode::rational);
  CHECK(arith_mode_from_name("floating") == ArithMode::floating);
  CHECK(arith_mode_from_name("float") == ArithMode::floating);
  CHECK(arith_mode_name(ArithMode::rational) == std::string("rational"));
  CHECK(arith_mode_name(ArithMode::floating) == std::string("floating"));
  CHECK(thrown_code([] { arith_mode_from_name("decimal"); }) == Errc::invalid_argument);
}
