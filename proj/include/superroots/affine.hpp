#pragma once

#include "superroots/finite.hpp"

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <vector>

namespace superroots {

/// Untwisted affine type. Allowed families: A, B, C, D (p >= 2), D21L, F4, G3.
struct AffineTypeId {
  FiniteTypeId finite;

  std::string label() const { return finite.label() + "^(1)"; }
  void validate() const;
};

AffineTypeId parse_affine_type(std::string_view text);

/// R = Ṙ + Zδ, never materialized.
///
/// A finite direction is a pair (finite vector, σ multiplicity). For
/// A(n,n)^(1) the odd directions carry σ = ±1 and for n = 1 one finite vector
/// occurs with both signs, so the σ rule is a set per finite vector.
class AffineRootSystem {
 public:
  explicit AffineRootSystem(const AffineTypeId& type, std::optional<Rational> lambda = std::nullopt);

  const AffineTypeId& type() const { return type_; }
  const FiniteRootSet& finite_part() const { return finite_; }
  const FormTable& form() const { return finite_.form(); }
  BasisId basis() const { return finite_.basis(); }
  bool traceless() const { return type_.finite.traceless(); }

  /// Input normalization: traceless projection for A(n,n)^(1), identity otherwise.
  Root canonicalize(const Root& r) const;
  bool contains(const Root& r) const;
  /// Allowed σ values for a finite vector; empty if the vector is not in Ṙ.
  std::set<std::int64_t> sigma_values(const Root& finite_vector) const;

  // Direction table. Index 0 is the zero direction.
  int direction_count() const { return static_cast<int>(dirs_.size()); }
  const Root& direction(int i) const { return dirs_[static_cast<std::size_t>(i)]; }
  /// Direction of r (k ignored), or -1.
  int direction_index(const Root& r) const;
  int zero_direction() const { return zero_; }
  int negation(int i) const { return neg_[static_cast<std::size_t>(i)]; }
  /// Direction of d_i + d_j, or -1.
  int sum_index(int i, int j) const { return sum_[static_cast<std::size_t>(i * direction_count() + j)]; }
  /// Direction of d_i + 2 d_j, or -1.
  int sum2_index(int i, int j) const { return sum2_[static_cast<std::size_t>(i * direction_count() + j)]; }
  /// Kind of d + kδ for any k (for the zero direction: Imaginary, or Zero at k = 0).
  RootKind direction_kind(int i) const { return kind_[static_cast<std::size_t>(i)]; }
  Parity direction_parity(int i) const { return parity_[static_cast<std::size_t>(i)]; }
  bool is_real_direction(int i) const { return direction_kind(i) == RootKind::Real; }

  /// Real classes {±β̇}: (representative, negative), representative being
  /// the lexicographically smaller of the two. Sorted by representative.
  const std::vector<std::pair<int, int>>& real_classes() const { return classes_; }
  /// Class index of a real direction and +1/-1 for rep/negative, or {-1,0}.
  std::pair<int, int> class_of(int dir) const;

  /// All roots d + kδ with |k| <= K, ordered by k then direction.
  std::vector<Root> window(std::int64_t K) const;

  Root make_root(int dir, std::int64_t k) const { return direction(dir).shifted(k); }

 private:
  AffineTypeId type_;
  FiniteRootSet finite_;
  std::vector<Root> dirs_;
  std::map<Root, int> index_;
  int zero_ = 0;
  std::vector<int> neg_, sum_, sum2_;
  std::vector<RootKind> kind_;
  std::vector<Parity> parity_;
  std::vector<std::pair<int, int>> classes_;
  std::vector<std::pair<int, int>> class_of_;
};

using SystemPtr = std::shared_ptr<const AffineRootSystem>;

AffineRootSystem build_affine(const AffineTypeId& type, std::optional<Rational> lambda = std::nullopt);
SystemPtr make_system(const AffineTypeId& type, std::optional<Rational> lambda = std::nullopt);

/// Computed from the form. Throws NotARoot.
RootKind classify(const AffineRootSystem& system, const Root& root);
/// Structural parity of the finite part; the δ multiple never matters.
Parity parity(const AffineRootSystem& system, const Root& root);
/// β - <β,α> α. Throws NotARoot, NotRealRoot, IsotropicReflectionError; the
/// result must lie in R when β is real or imaginary (AxiomViolation otherwise).
Root reflect(const AffineRootSystem& system, const Root& alpha, const Root& beta);

}  // namespace superroots
