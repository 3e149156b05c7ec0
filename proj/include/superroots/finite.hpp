#pragma once

#include "superroots/form.hpp"
#include "superroots/root.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace superroots {

/// Type families. Rank fields follow the label as written:
///   A(p,q)   p+1 eps and q+1 delta symbols; p == q uses the traceless form
///   B(p,q), D(p,q), BC(p,q), C(p,q)   p eps, q delta
///   C(p)     = D(1, p-1)
///   s(p-1,p-1)  unprojected, degenerate; stored with p
///   D21L, F4, G3 exceptional
///   Pure     a set given by explicit roots (components, subsets)
enum class Family { A, B, C, CMN, D, BC, D21L, F4, G3, SDeg, Pure };

struct FiniteTypeId {
  Family family = Family::Pure;
  int p = 0;
  int q = 0;
  std::string pure_label;

  std::string label() const;
  std::vector<int> ranks() const;
  BasisId basis() const;
  /// A(n,n) with n >= 1, in traceless coordinates.
  bool traceless() const { return family == Family::A && p == q; }
  /// Throws RankError for ranks outside the family's range.
  void validate() const;

  friend bool operator==(const FiniteTypeId& a, const FiniteTypeId& b) {
    return a.family == b.family && a.p == b.p && a.q == b.q && a.pure_label == b.pure_label;
  }
};

/// "A,2,1", "B,1,1", "C,2", "C,1,1", "D,2,1", "BC,1,1", "D21L", "F4", "G3",
/// "s,2". Throws UnknownType or RankError.
FiniteTypeId parse_finite_type(std::string_view text);

enum class RootKind { Zero, Real, Nonsingular, Imaginary };
enum class Parity { Even, Odd };

const char* to_string(RootKind k);
const char* to_string(Parity p);

/// Finite set of vectors containing 0, with its form. Roots are kept sorted.
class FiniteRootSet {
 public:
  FiniteRootSet() = default;
  FiniteRootSet(FiniteTypeId type, FormTable form, std::vector<Root> roots);

  const FiniteTypeId& type() const { return type_; }
  const FormTable& form() const { return form_; }
  BasisId basis() const { return form_.basis; }
  const std::vector<Root>& roots() const { return roots_; }
  std::size_t size() const { return roots_.size(); }
  bool contains(const Root& r) const { return index_.count(r) != 0; }
  std::optional<std::size_t> index_of(const Root& r) const;

  /// Kind inside this set: Imaginary means orthogonal to every element.
  RootKind kind(const Root& r) const;
  std::vector<Root> of_kind(RootKind k) const;

 private:
  FiniteTypeId type_;
  FormTable form_;
  std::vector<Root> roots_;
  std::map<Root, std::size_t> index_;
};

/// Builds the finite set of the given type. lambda substitutes a numeric
/// value for D(2,1;lambda).
FiniteRootSet build_finite(const FiniteTypeId& type, std::optional<Rational> lambda = std::nullopt);

/// Structural parity: a mod-2 functional per basis kind. Traceless A(n,n)
/// vectors are odd iff both their eps and delta parts are nonzero.
Parity finite_parity(const FiniteTypeId& type, const Root& r);

/// Even part of the basic classical superalgebra of this type, in the
/// symbolic form of the standard classification table.
std::string even_part_label(const FiniteTypeId& type);

/// Projection of eps and delta parts onto their sum-zero subspaces.
Root traceless_projection(const Root& r);

}  // namespace superroots
