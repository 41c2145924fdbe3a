#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <variant>

namespace walkbound {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class ArithMode { rational, floating };

const char* arith_mode_name(ArithMode m);
ArithMode arith_mode_from_name(const std::string& name);

// Numeric value tagged with its arithmetic mode. Rational values stay exact
// under +,-,*,/ and compare exactly; any operation with a floating operand
// yields a floating result. Mixed comparisons are still exact: the double is
// lifted to its dyadic rational (doubles are rationals), so ordering never
// depends on rounding.
class Scalar {
 public:
  Scalar() : v_(Rational(0)) {}
  Scalar(int n) : v_(Rational(n)) {}
  Scalar(long long n) : v_(Rational(n)) {}
  Scalar(const BigInt& n) : v_(Rational(n)) {}
  Scalar(const Rational& r) : v_(r) {}
  Scalar(Rational&& r) : v_(std::move(r)) {}

  // Doubles enter as floating-mode values; exact dyadic conversion is a
  // separate, deliberate call.
  static Scalar floating(double d) {
    Scalar s;
    s.v_ = d;
    return s;
  }
  static Scalar exact_from_double(double d);

  ArithMode mode() const { return is_rational() ? ArithMode::rational : ArithMode::floating; }
  bool is_rational() const { return std::holds_alternative<Rational>(v_); }
  const Rational& rational() const;  // InvalidArgument unless rational mode
  double to_double() const;

  // Same numeric value re-tagged. rational -> floating rounds to nearest
  // double; floating -> rational is exact (dyadic).
  Scalar converted(ArithMode m) const;

  // Canonical text: rationals as "p/q" ("p" when q == 1), floats as %.17g.
  std::string str() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);  // InvalidArgument on rational /0

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  bool operator==(const Scalar& o) const { return compare(o) == 0; }
  bool operator!=(const Scalar& o) const { return compare(o) != 0; }
  bool operator<(const Scalar& o) const { return compare(o) < 0; }
  bool operator<=(const Scalar& o) const { return compare(o) <= 0; }
  bool operator>(const Scalar& o) const { return compare(o) > 0; }
  bool operator>=(const Scalar& o) const { return compare(o) >= 0; }

  // -1 / 0 / +1; exact across modes for finite values.
  int compare(const Scalar& o) const;

 private:
  std::variant<Rational, double> v_;
};

Scalar abs(const Scalar& s);
Scalar pow(const Scalar& base, unsigned exponent);

// "p", "-p", "p/q" parse as rationals (q > 0 after normalization); decimal or
// exponent literals parse as floating. MalformedLine on anything else.
// `forced_floating` reports whether the token required floating mode.
Scalar parse_scalar(const std::string& token, bool* forced_floating = nullptr);

std::string format_double(double d);  // %.17g

}  // namespace walkbound
