#pragma once

#include "superroots/rational.hpp"
#include "superroots/root.hpp"
#include "superroots/scalar.hpp"

#include <optional>
#include <vector>

namespace superroots {

using Vec = std::vector<Rational>;

/// Coefficients c with sum_i c_i * columns[i] = target, or nullopt.
/// If the columns are dependent some solution is returned.
std::optional<Vec> solve_combination(const std::vector<Vec>& columns, const Vec& target);

/// Same, on flattened roots.
std::optional<Vec> coordinates_in(const std::vector<Root>& basis, const Root& target);

std::size_t rank_of(std::vector<Vec> rows);

/// Indices of a maximal independent subset, chosen greedily in order.
std::vector<std::size_t> independent_subset(const std::vector<Vec>& vectors);

/// If a = c*b for a rational c (b nonzero), returns c.
std::optional<Rational> proportionality(const Vec& a, const Vec& b);

/// Polynomial in lambda with rational coefficients, lowest degree first.
struct Poly {
  std::vector<Rational> c;
  bool is_zero() const;
  int degree() const;
  Poly operator*(const Poly& o) const;
  Poly operator+(const Poly& o) const;
  Poly operator-() const;
  static Poly from(const Scalar& s);
};

/// Determinant of a square matrix of scalars, as a polynomial in lambda.
Poly determinant(const std::vector<std::vector<Scalar>>& m);

/// True if p does not vanish for any lambda outside {0, -1}; that is, after
/// removing the factors lambda and (1 + lambda) only a nonzero constant remains.
bool nonvanishing_generically(Poly p);

}  // namespace superroots
