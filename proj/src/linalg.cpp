#include "superroots/linalg.hpp"

#include <algorithm>

namespace superroots {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<Vec>& a, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < a.size(); ++col) {
    std::size_t p = row;
    while (p < a.size() && a[p][col] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    const Rational inv = Rational(1) / a[row][col];
    for (auto& x : a[row]) x *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t c = 0; c < a[r].size(); ++c) a[r][c] -= f * a[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::optional<Vec> solve_combination(const std::vector<Vec>& columns, const Vec& target) {
  const std::size_t n = columns.size();
  const std::size_t dim = target.size();
  std::vector<Vec> aug(dim, Vec(n + 1));
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug[r][c] = columns[c].at(r);
    aug[r][n] = target[r];
  }
  const auto pivots = rref(aug, n + 1);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  Vec x(n);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][n];
  return x;
}

std::optional<Vec> coordinates_in(const std::vector<Root>& basis, const Root& target) {
  std::vector<Vec> cols;
  cols.reserve(basis.size());
  for (const auto& b : basis) cols.push_back(flatten(b));
  return solve_combination(cols, flatten(target));
}

std::size_t rank_of(std::vector<Vec> rows) {
  if (rows.empty()) return 0;
  return rref(rows, rows.front().size()).size();
}

std::vector<std::size_t> independent_subset(const std::vector<Vec>& vectors) {
  std::vector<std::size_t> chosen;
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    rows.push_back(vectors[i]);
    if (rank_of(rows) == rows.size()) chosen.push_back(i);
    else rows.pop_back();
  }
  return chosen;
}

std::optional<Rational> proportionality(const Vec& a, const Vec& b) {
  std::optional<Rational> c;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] == 0) {
      if (a[i] != 0) return std::nullopt;
      continue;
    }
    const Rational q = a[i] / b[i];
    if (c && *c != q) return std::nullopt;
    c = q;
  }
  return c;
}

bool Poly::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](const Rational& x) { return x == 0; });
}

int Poly::degree() const {
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
    if (c[static_cast<std::size_t>(i)] != 0) return i;
  return -1;
}

Poly Poly::operator*(const Poly& o) const {
  if (c.empty() || o.c.empty()) return {};
  Poly r{Vec(c.size() + o.c.size() - 1)};
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r{Vec(std::max(c.size(), o.c.size()))};
  for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
  for (std::size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.c) x = -x;
  return r;
}

Poly Poly::from(const Scalar& s) { return Poly{{s.constant_part(), s.lambda_part()}}; }

Poly determinant(const std::vector<std::vector<Scalar>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return Poly{{Rational(1)}};
  if (n == 1) return Poly::from(m[0][0]);
  Poly acc;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_identically_zero()) continue;
    std::vector<std::vector<Scalar>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Scalar> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    Poly term = Poly::from(m[0][j]) * determinant(minor);
    acc = acc + (j % 2 == 0 ? term : -term);
  }
  return acc;
}

bool nonvanishing_generically(Poly p) {
  if (p.is_zero()) return false;
  // Strip factors lambda.
  while (p.degree() > 0 && p.c[0] == 0) p.c.erase(p.c.begin());
  // Strip factors (lambda + 1) while -1 is a root.
  while (p.degree() > 0) {
    const int d = p.degree();
    Rational value = 0;
    for (int i = d; i >= 0; --i) value = -value + p.c[static_cast<std::size_t>(i)];
    if (value != 0) break;
    Vec q(static_cast<std::size_t>(d));
    Rational carry = 0;
    for (int i = d; i >= 1; --i) {
      carry = p.c[static_cast<std::size_t>(i)] - carry;
      q[static_cast<std::size_t>(i - 1)] = carry;
    }
    p.c = q;
  }
  return p.degree() == 0;
}

}  // namespace superroots
