#pragma once

#include "superroots/linalg.hpp"
#include "superroots/root.hpp"

#include <vector>

namespace superroots {

/// Linear functional given by its values on a set of roots. Values on the
/// span of that set are determined; outside it the extension sets free
/// coordinates to 0.
class LinearFunctional {
 public:
  LinearFunctional() = default;
  /// Throws InvalidFunctional if the values are inconsistent.
  LinearFunctional(std::vector<Root> basis, std::vector<Rational> values);
  /// Functional with the given coefficients on flatten() coordinates.
  static LinearFunctional from_coefficients(BasisId basis, Vec coefficients);

  Rational operator()(const Root& r) const;
  Rational at_delta() const { return coeff_.back(); }

  const std::vector<Root>& basis() const { return basis_; }
  const std::vector<Rational>& values() const { return values_; }
  const Vec& coefficients() const { return coeff_; }

 private:
  std::vector<Root> basis_;
  std::vector<Rational> values_;
  Vec coeff_;  // on coords..., sigma, k
};

}  // namespace superroots
