#pragma once

#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace superroots {

/// Exact rational on 64-bit integers.
///
/// A thin wrapper over boost::rational: Boost 1.74's mixed integer
/// comparisons recurse under C++20 rewritten operators, so all comparisons
/// here go through rational-vs-rational.
class Rational {
 public:
  using Base = boost::rational<std::int64_t>;

  Rational() = default;
  Rational(std::int64_t n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d) : v_(n, d) {}

  std::int64_t numerator() const { return v_.numerator(); }
  std::int64_t denominator() const { return v_.denominator(); }

  Rational operator-() const { return Rational(-v_); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { v_ /= o.v_; return *this; }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.numerator() == b.numerator() && a.denominator() == b.denominator();
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (b.v_ < a.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  explicit Rational(Base v) : v_(v) {}
  Base v_;
};

/// Serializes as "p/q" with q > 0, including integers ("3/1").
std::string to_string(const Rational& q);

/// Compact human form: "3", "-1/2".
std::string to_display(const Rational& q);

/// Accepts "p", "-p", "p/q". Throws ParseError.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& q) { return q.denominator() == 1; }

std::int64_t floor_of(const Rational& q);
std::int64_t ceil_of(const Rational& q);

}  // namespace superroots
