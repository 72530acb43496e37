#include "mvlaw/rational.hpp"

#include <cstdlib>

namespace mvlaw {
namespace {

using int128 = __int128;

std::int64_t narrow(int128 v, const char* op) {
  if (v > INT64_MAX || v < INT64_MIN) throw input_error(std::string("rational overflow in ") + op);
  return static_cast<std::int64_t>(v);
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw input_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g == 0) g = 1;
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  const char* s = text.c_str();
  char* end = nullptr;
  if (slash == std::string::npos) {
    std::int64_t n = std::strtoll(s, &end, 10);
    if (end == s || *end != '\0') throw input_error("bad rational literal: " + text);
    return Rational(n, 1);
  }
  std::int64_t n = std::strtoll(s, &end, 10);
  if (end != s + slash) throw input_error("bad rational literal: " + text);
  const char* d = s + slash + 1;
  std::int64_t q = std::strtoll(d, &end, 10);
  if (end == d || *end != '\0') throw input_error("bad rational literal: " + text);
  return Rational(n, q);
}

Rational Rational::operator+(const Rational& o) const {
  int128 n = int128(num_) * o.den_ + int128(o.num_) * den_;
  int128 d = int128(den_) * o.den_;
  auto gg = [](int128 a, int128 b) {
    if (a < 0) a = -a;
    while (b) {
      int128 t = a % b;
      a = b;
      b = t;
    }
    return a ? a : int128(1);
  };
  int128 k = gg(n, d);
  return Rational(narrow(n / k, "+"), narrow(d / k, "+"));
}

Rational Rational::operator-(const Rational& o) const { return *this + Rational(-o.num_, o.den_); }

Rational Rational::operator*(const Rational& o) const {
  int128 n = int128(num_) * o.num_;
  int128 d = int128(den_) * o.den_;
  auto gg = [](int128 a, int128 b) {
    if (a < 0) a = -a;
    while (b) {
      int128 t = a % b;
      a = b;
      b = t;
    }
    return a ? a : int128(1);
  };
  int128 k = gg(n, d);
  return Rational(narrow(n / k, "*"), narrow(d / k, "*"));
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) throw input_error("rational division by zero");
  return *this * Rational(o.den_, o.num_);
}

bool Rational::operator<(const Rational& o) const {
  return int128(num_) * o.den_ < int128(o.num_) * den_;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace mvlaw
