#include "superroots/functional.hpp"

#include "superroots/errors.hpp"

namespace superroots {

LinearFunctional::LinearFunctional(std::vector<Root> basis, std::vector<Rational> values)
    : basis_(std::move(basis)), values_(std::move(values)) {
  if (basis_.empty() || basis_.size() != values_.size())
    throw InvalidFunctional("basis and values differ in length");
  // Solve coeff . flatten(b_i) = v_i; rows are the flattened basis roots.
  const std::size_t dim = flatten(basis_[0]).size();
  std::vector<Vec> cols(dim, Vec(basis_.size()));
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Vec f = flatten(basis_[i]);
    for (std::size_t c = 0; c < dim; ++c) cols[c][i] = f[c];
  }
  auto sol = solve_combination(cols, values_);
  if (!sol) throw InvalidFunctional("values are not consistent with a linear functional");
  coeff_ = *sol;
}

LinearFunctional LinearFunctional::from_coefficients(BasisId basis, Vec coefficients) {
  LinearFunctional f;
  const std::size_t dim = static_cast<std::size_t>(basis.dim()) + 2;
  if (coefficients.size() != dim) throw InvalidFunctional("wrong coefficient count");
  f.coeff_ = std::move(coefficients);
  for (int i = 0; i < basis.dim(); ++i) {
    f.basis_.push_back(Root::unit(basis, i));
    f.values_.push_back(f.coeff_[static_cast<std::size_t>(i)]);
  }
  Root s(basis);
  s.sigma = 1;
  f.basis_.push_back(s);
  f.values_.push_back(f.coeff_[dim - 2]);
  f.basis_.push_back(Root::delta(basis));
  f.values_.push_back(f.coeff_[dim - 1]);
  return f;
}

Rational LinearFunctional::operator()(const Root& r) const {
  const Vec f = flatten(r);
  if (f.size() != coeff_.size()) throw BasisMismatch("functional applied to " + r.to_string());
  Rational acc = 0;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i] != 0) acc += f[i] * coeff_[i];
  return acc;
}

}  // namespace superroots
