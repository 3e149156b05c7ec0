#pragma once

#include "superroots/zeta.hpp"

#include <string>
#include <vector>

namespace superroots {

/// R₀ as a subset: every even direction with its full line, and Zδ.
RootSubset even_part(const SystemPtr& system);

/// Shadow giving the real classes of component i the pattern patterns[i];
/// real classes outside the components are tight (in on both lines).
Shadow component_shadow(const SystemPtr& system, const std::vector<ComponentData>& components,
                        const std::vector<LinePattern>& patterns);

struct Scenario {
  std::string name;
  AffineTypeId type;
  std::vector<LinePattern> patterns;  // one per component of R₀
};

/// d21l-case1..4 and b11-case1..4.
std::vector<Scenario> named_scenarios();
/// Throws UnknownType for an unknown name.
Scenario find_scenario(const std::string& name);

struct PipelineResult {
  SystemPtr system;
  RootSubset S;
  std::vector<ComponentData> components;
  std::vector<PSet> P;
  std::vector<CompatibleBase> bases;
  std::vector<CheckResult> component_parabolic;
  std::vector<bool> component_proper;
  RootSubset P_union;
  ZetaResult zeta;
  FunctionalReport report;

  bool ok() const;
};

/// decompose, build_P, find_compatible_base, construct_zeta and
/// verify_functional on S = R₀.
PipelineResult run_pipeline(const SystemPtr& system, const std::vector<LinePattern>& patterns, std::int64_t K);

}  // namespace superroots
