#pragma once

#include "superroots/rational.hpp"

#include <string>

namespace superroots {

/// Element a + b*lambda of the degree-one part of Q[lambda].
///
/// Sign questions are answered under the standing assumption that lambda is
/// neither 0 nor -1. A scalar whose only root is another value has no
/// decidable sign and raises AmbiguousSign.
class Scalar {
 public:
  Scalar() = default;
  Scalar(Rational c) : a_(c) {}  // NOLINT(google-explicit-constructor)
  Scalar(std::int64_t c) : a_(c) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational c, Rational l) : a_(c), b_(l) {}

  static Scalar lambda() { return Scalar(Rational(0), Rational(1)); }

  const Rational& constant_part() const { return a_; }
  const Rational& lambda_part() const { return b_; }
  bool is_constant() const { return b_ == 0; }
  bool is_identically_zero() const { return a_ == 0 && b_ == 0; }

  /// Zero test under lambda not in {0, -1}. Throws AmbiguousSign.
  bool is_zero() const;

  Scalar operator-() const { return Scalar(-a_, -b_); }
  Scalar& operator+=(const Scalar& o) { a_ += o.a_; b_ += o.b_; return *this; }
  Scalar& operator-=(const Scalar& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
  Scalar& operator*=(const Rational& c) { a_ *= c; b_ *= c; return *this; }

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Rational& c) { return x *= c; }
  friend Scalar operator*(const Rational& c, Scalar x) { return x *= c; }
  /// Throws NonLinearProduct when both factors depend on lambda.
  friend Scalar operator*(const Scalar& x, const Scalar& y);

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

  /// Substitutes a numeric lambda.
  Rational at(const Rational& lambda_value) const { return a_ + b_ * lambda_value; }

  std::string to_string() const;

 private:
  Rational a_{0};
  Rational b_{0};
};

/// Exact quotient x / y as a scalar.
///
/// If y is constant the division is componentwise. Otherwise x must be a
/// rational multiple of y. Throws DivisionByZero or NonLinearQuotient.
Scalar scalar_div(const Scalar& x, const Scalar& y);

}  // namespace superroots
