#include "walkbound/scalar.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "walkbound/errors.hpp"

namespace walkbound {

const char* arith_mode_name(ArithMode m) {
  return m == ArithMode::rational ? "rational" : "floating";
}

ArithMode arith_mode_from_name(const std::string& name) {
  if (name == "rational") return ArithMode::rational;
  if (name == "floating" || name == "float") return ArithMode::floating;
  fail(Errc::invalid_argument, "unknown arithmetic mode '" + name + "'");
}

Scalar Scalar::exact_from_double(double d) {
  if (!std::isfinite(d)) fail(Errc::invalid_argument, "cannot lift non-finite double to rational");
  return Scalar(Rational(d));
}

const Rational& Scalar::rational() const {
  if (!is_rational()) fail(Errc::invalid_argument, "scalar is not in rational mode");
  return std::get<Rational>(v_);
}

double Scalar::to_double() const {
  if (is_rational()) return std::get<Rational>(v_).convert_to<double>();
  return std::get<double>(v_);
}

Scalar Scalar::converted(ArithMode m) const {
  if (m == mode()) return *this;
  if (m == ArithMode::floating) return Scalar::floating(to_double());
  return exact_from_double(std::get<double>(v_));
}

std::string Scalar::str() const {
  if (is_rational()) {
    const Rational& r = std::get<Rational>(v_);
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
  }
  return format_double(std::get<double>(v_));
}

Scalar Scalar::operator-() const {
  if (is_rational()) return Scalar(Rational(-std::get<Rational>(v_)));
  return Scalar::floating(-std::get<double>(v_));
}

namespace {

// Arithmetic promotes to floating as soon as either side is floating.
template <class Op>
void apply(std::variant<Rational, double>& a, const std::variant<Rational, double>& b, Op op) {
  if (std::holds_alternative<Rational>(a) && std::holds_alternative<Rational>(b)) {
    op(std::get<Rational>(a), std::get<Rational>(b));
    return;
  }
  double x = std::holds_alternative<double>(a) ? std::get<double>(a)
                                               : std::get<Rational>(a).convert_to<double>();
  double y = std::holds_alternative<double>(b) ? std::get<double>(b)
                                               : std::get<Rational>(b).convert_to<double>();
  op(x, y);
  a = x;
}

}  // namespace

Scalar& Scalar::operator+=(const Scalar& o) {
  apply(v_, o.v_, [](auto& x, const auto& y) { x += y; });
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  apply(v_, o.v_, [](auto& x, const auto& y) { x -= y; });
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  apply(v_, o.v_, [](auto& x, const auto& y) { x *= y; });
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_rational() && std::get<Rational>(o.v_) == 0 && is_rational())
    fail(Errc::invalid_argument, "rational division by zero");
  apply(v_, o.v_, [](auto& x, const auto& y) { x /= y; });
  return *this;
}

int Scalar::compare(const Scalar& o) const {
  if (is_rational() && o.is_rational()) {
    const Rational& a = std::get<Rational>(v_);
    const Rational& b = std::get<Rational>(o.v_);
    return a < b ? -1 : (a == b ? 0 : 1);
  }
  // Lift finite doubles to exact dyadic rationals so the comparison cannot be
  // perturbed by rounding the rational side.
  auto as_rational = [](const std::variant<Rational, double>& v) -> Rational {
    if (std::holds_alternative<Rational>(v)) return std::get<Rational>(v);
    return Rational(std::get<double>(v));
  };
  bool finite = (is_rational() || std::isfinite(std::get<double>(v_))) &&
                (o.is_rational() || std::isfinite(std::get<double>(o.v_)));
  if (finite) {
    Rational a = as_rational(v_);
    Rational b = as_rational(o.v_);
    return a < b ? -1 : (a == b ? 0 : 1);
  }
  double x = to_double();
  double y = o.to_double();
  return x < y ? -1 : (x == y ? 0 : 1);
}

Scalar abs(const Scalar& s) { return s < Scalar(0) ? -s : s; }

Scalar pow(const Scalar& base, unsigned exponent) {
  Scalar acc(1);
  Scalar b = base;
  unsigned e = exponent;
  while (e > 0) {
    if (e & 1u) acc *= b;
    e >>= 1u;
    if (e > 0) b *= b;
  }
  return acc;
}

namespace {

bool is_integer_token(const std::string& s, size_t begin, size_t end) {
  if (begin >= end) return false;
  size_t i = begin;
  if (s[i] == '+' || s[i] == '-') ++i;
  if (i >= end) return false;
  for (; i < end; ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Scalar parse_scalar(const std::string& token, bool* forced_floating) {
  if (forced_floating) *forced_floating = false;
  if (token.empty()) fail(Errc::malformed_line, "empty numeric token");
  size_t slash = token.find('/');
  if (slash != std::string::npos) {
    if (!is_integer_token(token, 0, slash) || !is_integer_token(token, slash + 1, token.size()))
      fail(Errc::malformed_line, "bad rational literal '" + token + "'");
    BigInt num(token.substr(0, slash));
    BigInt den(token.substr(slash + 1));
    if (den == 0) fail(Errc::malformed_line, "zero denominator in '" + token + "'");
    return Scalar(Rational(num, den));
  }
  if (is_integer_token(token, 0, token.size())) return Scalar(Rational(BigInt(token)));
  const char* begin = token.c_str();
  char* parse_end = nullptr;
  double d = std::strtod(begin, &parse_end);
  if (parse_end != begin + token.size() || !std::isfinite(d))
    fail(Errc::malformed_line, "bad numeric token '" + token + "'");
  if (forced_floating) *forced_floating = true;
  return Scalar::floating(d);
}

std::string format_double(double d) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", d);
  return buf;
}

}  // namespace walkbound
