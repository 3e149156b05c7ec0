#pragma once

#include "superroots/axioms.hpp"
#include "superroots/shadow.hpp"
#include "superroots/subset.hpp"

#include <vector>

namespace superroots {

enum class HybridDirection { Up, Down };
const char* to_string(HybridDirection d);

/// One irreducible piece S(i) = (Ṡ(i) + Zδ) ∩ R₀ of a symmetric closed S,
/// with 0 and Zδ included.
struct ComponentData {
  int index = 0;  // 1-based
  FiniteRootSet dot_component;
  RootSubset affine_part;
  std::vector<Root> base;  // B_i from find_base
  Root theta;
  std::vector<std::int64_t> coeffs;  // θ = Σ r_j α_j
  std::string label;  // Cartan type of Ṡ(i)
};

/// Splits S along the irreducible components of Ṡ. Throws HypothesisViolated.
std::vector<ComponentData> decompose(const RootSubset& S, std::int64_t K = 8);

struct PSet {
  RootSubset set;
  HybridDirection direction;
};

/// P_i = S(i)^ln ∪ -S(i)^in ∪ Z≥0 δ (Z≤0 δ for down). Throws NotUniformlyHybrid.
PSet build_P(const ComponentData& component, const Shadow& shadow);

/// Base Π_i = B_i ∪ {δ - θ_i} of S(i) whose positive roots lie in P_i.
///
/// B_i = {α'_j + s_j δ} for a base B' in the Weyl orbit of the canonical one
/// and integer shifts s_j; δ - θ_i is then δ - θ' - (Σ r_j s_j) δ. Among
/// compatible choices the one with most B_i elements in P \ -P is taken,
/// then the smallest max|s_j|, then the first in search order.
struct CompatibleBase {
  int component = 0;
  HybridDirection direction = HybridDirection::Up;
  std::vector<Root> finite_base;        // B'
  std::vector<std::int64_t> shifts;     // s_j
  std::vector<Root> B;                  // α_{j,i}
  std::vector<std::int64_t> coeffs;     // r_{j,i}
  Root delta_minus_theta;
  std::vector<bool> B_strict;           // α_{j,i} ∈ P \ -P
  bool dmt_strict = false;              // δ - θ_i ∈ P \ -P
  int t = 0;                            // number of strict B_i elements
  std::size_t searched = 0;
  /// B followed by δ - θ_i.
  std::vector<Root> pi() const;
};

/// Throws NoCompatibleBase.
CompatibleBase find_compatible_base(const ComponentData& component, const PSet& P);

}  // namespace superroots
