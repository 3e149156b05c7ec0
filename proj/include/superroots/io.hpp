#pragma once

#include "superroots/axioms.hpp"
#include "superroots/scenario.hpp"
#include "superroots/tables.hpp"

#include <json.hpp>

namespace superroots {

using Json = nlohmann::ordered_json;

/// Comma form accepted by the type parsers: "B,1,1", "C,2", "D21L".
std::string type_key(const FiniteTypeId& type);
std::string lambda_mode(const FormTable& form);

Json rational_json(const Rational& r);
Json root_json(const Root& r);
/// Throws ParseError.
Root root_from_json(BasisId basis, const Json& j);

Json finite_set_json(const FiniteRootSet& set);
Json window_json(const AffineRootSystem& system, std::int64_t K);

Json system_json(const AffineRootSystem& system);
/// Throws ParseError, UnknownType, RankError.
SystemPtr system_from_json(const Json& j);

Json config_json(const ClassConfig& c);
ClassConfig config_from_json(const Json& j);
Json shadow_json(const Shadow& shadow);
/// Every real class must appear once, keyed by its representative.
Shadow shadow_from_json(const Json& j);

Json violations_json(const std::vector<ClosureViolation>& v);
Json axiom_report_json(const AxiomReport& r);
Json golden_report_json(const GoldenReport& r);
Json components_json(const std::vector<ComponentData>& components);
Json zeta_json(const LinearFunctional& zeta);
Json functional_report_json(const FunctionalReport& r);
Json pipeline_json(const PipelineResult& r);

}  // namespace superroots
