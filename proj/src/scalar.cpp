#include "superroots/scalar.hpp"

#include "superroots/errors.hpp"

namespace superroots {

bool Scalar::is_zero() const {
  if (b_ == 0) return a_ == 0;
  const Rational root = -a_ / b_;
  if (root == 0 || root == -1) return false;
  throw AmbiguousSign(to_string() + " vanishes at lambda = " + to_display(root));
}

Scalar operator*(const Scalar& x, const Scalar& y) {
  if (x.is_constant()) return y * x.constant_part();
  if (y.is_constant()) return x * y.constant_part();
  throw NonLinearProduct("(" + x.to_string() + ")*(" + y.to_string() + ")");
}

std::string Scalar::to_string() const {
  if (b_ == 0) return to_display(a_);
  std::string lam;
  if (b_ == 1) lam = "λ";
  else if (b_ == -1) lam = "-λ";
  else lam = to_display(b_) + "λ";
  if (a_ == 0) return lam;
  if (lam.front() == '-') return to_display(a_) + lam;
  return to_display(a_) + "+" + lam;
}

Scalar scalar_div(const Scalar& x, const Scalar& y) {
  if (y.is_identically_zero()) throw DivisionByZero(x.to_string() + " / 0");
  if (y.is_constant()) {
    return Scalar(x.constant_part() / y.constant_part(),
                  x.lambda_part() / y.constant_part());
  }
  // y depends on lambda: x = q*y for a rational q is the only linear outcome.
  const Rational q = x.lambda_part() / y.lambda_part();
  if (x.constant_part() != q * y.constant_part())
    throw NonLinearQuotient("(" + x.to_string() + ")/(" + y.to_string() + ")");
  return Scalar(q);
}

}  // namespace superroots
