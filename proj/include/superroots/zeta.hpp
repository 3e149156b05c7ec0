#pragma once

#include "superroots/decompose.hpp"
#include "superroots/functional.hpp"

#include <optional>
#include <string>
#include <vector>

namespace superroots {

struct ZetaResult {
  LinearFunctional zeta;
  int case_number = 0;  // 1..4
  HybridDirection direction = HybridDirection::Up;
  /// ζ(δ); negative when the components are down-hybrid.
  Rational zeta_delta;
  std::vector<Rational> weights;  // w_i per component
};

/// Functional with P = {ζ >= 0} from compatible bases, all of one direction.
/// Down components are built with δ replaced by -δ and mapped back.
/// Throws CaseMismatch.
ZetaResult construct_zeta(const std::vector<CompatibleBase>& bases);

struct FunctionalReport {
  std::vector<std::string> membership_violations;  // P vs {ζ >= 0}
  std::vector<std::string> split_violations;       // ζ > 0 ln, ζ < 0 in
  CheckResult parabolic;
  bool proper = true;
  bool ok() const { return membership_violations.empty() && split_violations.empty() && parabolic.ok && proper; }
};

/// Checks P = {α ∈ S : ζ(α) >= 0} on |k| <= K, that P is a proper parabolic
/// subset of S, and (given a shadow) the sign split on real roots of S.
/// Throws InvalidFunctional if ζ(δ) = 0.
FunctionalReport verify_functional(const LinearFunctional& zeta, const RootSubset& P, const RootSubset& S,
                                   const Shadow* shadow, std::int64_t K);

}  // namespace superroots
