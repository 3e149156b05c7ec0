#include "superroots/scenario.hpp"

#include "superroots/errors.hpp"

namespace superroots {

RootSubset even_part(const SystemPtr& system) {
  RootSubset S(system);
  for (int d = 0; d < system->direction_count(); ++d)
    if (system->direction_parity(d) == Parity::Even) S.set_line(d, IntervalSet::all());
  return S;
}

Shadow component_shadow(const SystemPtr& system, const std::vector<ComponentData>& components,
                        const std::vector<LinePattern>& patterns) {
  if (patterns.size() != components.size())
    throw ParseError("expected " + std::to_string(components.size()) + " patterns, got " +
                     std::to_string(patterns.size()));
  Shadow sh = Shadow::uniform(system, ClassConfig::tight(PatternFamily::FullIN, PatternFamily::FullIN));
  for (std::size_t i = 0; i < components.size(); ++i) {
    for (int d : components[i].affine_part.directions()) {
      if (!system->is_real_direction(d)) continue;
      sh.set_config(system->class_of(d).first, ClassConfig::make_hybrid(patterns[i]));
    }
  }
  return sh;
}

std::vector<Scenario> named_scenarios() {
  const auto d21l = parse_affine_type("D21L");
  const auto b11 = parse_affine_type("B,1,1");
  using P = LinePattern;
  return {
      {"d21l-case1", d21l, {P::up(0, 1), P::up(1, -1), P::up(-1, 1)}},
      {"d21l-case2", d21l, {P::up(0, 0), P::up(1, 0), P::up(-1, 0)}},
      {"d21l-case3", d21l, {P::up(0, 0), P::up(1, 0), P::up(-1, 1)}},
      {"d21l-case4", d21l, {P::up(0, 1), P::up(1, 0), P::up(-1, -1)}},
      {"b11-case1", b11, {P::up(0, 1), P::up(1, -1)}},
      {"b11-case2", b11, {P::up(0, 0), P::up(-1, 0)}},
      {"b11-case3", b11, {P::up(1, 0), P::up(0, 1)}},
      {"b11-case4", b11, {P::up(-1, -1), P::up(0, 0)}},
  };
}

Scenario find_scenario(const std::string& name) {
  for (auto& s : named_scenarios())
    if (s.name == name) return s;
  throw UnknownType("no scenario named " + name);
}

bool PipelineResult::ok() const {
  for (const auto& c : component_parabolic)
    if (!c.ok) return false;
  for (bool p : component_proper)
    if (!p) return false;
  return report.ok() && zeta.zeta_delta != Rational(0);
}

PipelineResult run_pipeline(const SystemPtr& system, const std::vector<LinePattern>& patterns, std::int64_t K) {
  PipelineResult r{system, even_part(system), {}, {}, {}, {}, {}, RootSubset(system), {}, {}};
  r.components = decompose(r.S, K);
  const Shadow sh = component_shadow(system, r.components, patterns);
  for (const auto& c : r.components) {
    r.P.push_back(build_P(c, sh));
    r.bases.push_back(find_compatible_base(c, r.P.back()));
    r.component_parabolic.push_back(is_parabolic(r.P.back().set, c.affine_part, K));
    r.component_proper.push_back(!(r.P.back().set == c.affine_part));
    r.P_union = r.P_union.unite(r.P.back().set);
  }
  r.zeta = construct_zeta(r.bases);
  r.report = verify_functional(r.zeta.zeta, r.P_union, r.S, &sh, K);
  return r;
}

}  // namespace superroots
