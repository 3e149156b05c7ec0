#pragma once

#include "superroots/rational.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace superroots {

/// Ambient symbol families.
///   EpsDelta: e1..em, d1..dn
///   Gamma:    g1, g2, g3                 (D(2,1;lambda))
///   F4:       e, d1, d2, d3
///   G3:       e1, e2, e3, nu
enum class BasisKind { EpsDelta, Gamma, F4, G3 };

struct BasisId {
  BasisKind kind = BasisKind::EpsDelta;
  int m = 0;
  int n = 0;

  static BasisId eps_delta(int m, int n) { return {BasisKind::EpsDelta, m, n}; }
  static BasisId gamma() { return {BasisKind::Gamma, 0, 0}; }
  static BasisId f4() { return {BasisKind::F4, 0, 0}; }
  static BasisId g3() { return {BasisKind::G3, 0, 0}; }

  int dim() const;
  std::string symbol(int i) const;
  /// Index of a symbol name, or -1.
  int symbol_index(std::string_view name) const;

  friend bool operator==(const BasisId& a, const BasisId& b) {
    return a.kind == b.kind && a.m == b.m && a.n == b.n;
  }
  friend bool operator!=(const BasisId& a, const BasisId& b) { return !(a == b); }
};

/// Vector  sum_i coords[i]*x_i + sigma*σ + k*δ  in the ambient space.
///
/// δ and σ pair trivially with everything; σ only occurs in A(n,n)^(1).
struct Root {
  BasisId basis;
  std::vector<Rational> coords;
  std::int64_t k = 0;
  std::int64_t sigma = 0;

  Root() = default;
  explicit Root(BasisId b) : basis(b), coords(static_cast<std::size_t>(b.dim())) {}
  Root(BasisId b, std::vector<Rational> c, std::int64_t k_ = 0, std::int64_t s = 0);

  static Root unit(BasisId b, int i, Rational c = 1);
  static Root delta(BasisId b, std::int64_t k = 1);

  bool is_zero() const;
  bool finite_is_zero() const;
  /// Same vector with the δ multiplicity removed.
  Root direction() const;
  Root shifted(std::int64_t dk) const;

  Root operator-() const;
  Root& operator+=(const Root& o);
  Root& operator-=(const Root& o);
  friend Root operator+(Root a, const Root& b) { return a += b; }
  friend Root operator-(Root a, const Root& b) { return a -= b; }
  friend Root operator*(std::int64_t c, Root a);

  friend bool operator==(const Root& a, const Root& b);
  friend bool operator!=(const Root& a, const Root& b) { return !(a == b); }
  /// Lexicographic on coords, then sigma, then k.
  friend bool operator<(const Root& a, const Root& b);

  /// e.g. "e1-d1+σ-3δ", "1/2e+1/2d1", "0".
  std::string to_string() const;
};

/// Parses the to_string() syntax. Symbols: basis names, "delta"/"δ",
/// "sigma"/"σ". Coefficients may be integers or p/q.
Root parse_root(BasisId basis, std::string_view text);

/// coords followed by sigma and k, for linear algebra.
std::vector<Rational> flatten(const Root& r);

}  // namespace superroots
