// SPDX-License-Identifier: Apache-2.0
//
// Exact rational arithmetic for measure accounting. Every measure handled
// here is a ratio of small integers (support counts weighted by degrees,
// over |G| <= 256), so int64 components never get near overflow.

#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gaborlab {

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num(n), den(1) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    normalize();
  }

  void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  [[nodiscard]] double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  [[nodiscard]] std::string str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return {a.num * b.den + b.num * a.den, a.den * b.den};
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return {a.num * b.den - b.num * a.den, a.den * b.den};
  }
  friend Rational operator*(const Rational& a, const Rational& b) { return {a.num * b.num, a.den * b.den}; }
  friend Rational operator/(const Rational& a, const Rational& b) { return {a.num * b.den, a.den * b.num}; }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.num == b.num && a.den == b.den; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return a.num * b.den < b.num * a.den; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }
};

// Reduce a phase (in turns) to the canonical representative in [0, 1).
inline Rational mod1(const Rational& q) {
  std::int64_t n = q.num % q.den;
  if (n < 0) n += q.den;
  return {n, q.den};
}

}  // namespace gaborlab
