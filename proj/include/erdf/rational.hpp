#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace erdf {

// Exact fraction for reduction ratios and theorem bounds. Comparisons use
// cross-multiplication; nothing here ever touches floating point. The
// numerator/denominator are kept as constructed (no implicit gcd reduction),
// so a ratio built as 6/8 reports num=6, den=8.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d) : num(n), den(d) {
    if (den <= 0) throw std::invalid_argument("rational denominator must be positive");
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num * b.den == b.num * a.den;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num * b.den <=> b.num * a.den;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den).reduced();
  }
  friend Rational operator*(const Rational& a, long long k) {
    return Rational(a.num * k, a.den).reduced();
  }

  Rational reduced() const {
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g == 0) return Rational(0, 1);
    return Rational(num / g, den / g);
  }

  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

inline bool leq(long long value, const Rational& bound) {
  return value * bound.den <= bound.num;
}

}  // namespace erdf
