#pragma once

#include "superroots/root.hpp"
#include "superroots/scalar.hpp"

#include <optional>
#include <vector>

namespace superroots {

/// Gram matrix of the ambient symbols. δ and σ pair to zero with everything.
struct FormTable {
  BasisId basis;
  std::vector<Scalar> gram;  // dim x dim, row-major
  /// Numeric lambda substituted into the table, if any.
  std::optional<Rational> lambda_value;

  const Scalar& at(int i, int j) const {
    return gram[static_cast<std::size_t>(i * basis.dim() + j)];
  }

  /// Standard table for the basis. For Gamma a numeric lambda may be given;
  /// 0 and -1 are rejected with RankError.
  static FormTable standard(BasisId basis, std::optional<Rational> lambda = std::nullopt);
};

/// Bilinear form (u, v). Throws BasisMismatch.
Scalar form_eval(const Root& u, const Root& v, const FormTable& form);

/// <beta, alpha> = 2 (beta, alpha) / (alpha, alpha).
///
/// Throws IsotropicReflectionError if (alpha, alpha) = 0, and AxiomViolation
/// if the quotient is not an integer constant.
std::int64_t cartan_integer(const Root& beta, const Root& alpha, const FormTable& form);

}  // namespace superroots
