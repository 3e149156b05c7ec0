#include "superroots/io.hpp"

#include "superroots/errors.hpp"

namespace superroots {

std::string type_key(const FiniteTypeId& t) {
  auto two = [&](const char* f) { return std::string(f) + "," + std::to_string(t.p) + "," + std::to_string(t.q); };
  switch (t.family) {
    case Family::A: return two("A");
    case Family::B: return two("B");
    case Family::C: return "C," + std::to_string(t.p);
    case Family::CMN: return two("C");
    case Family::D: return two("D");
    case Family::BC: return two("BC");
    case Family::D21L: return "D21L";
    case Family::F4: return "F4";
    case Family::G3: return "G3";
    case Family::SDeg: return "s," + std::to_string(t.p);
    case Family::Pure: return t.pure_label;
  }
  return "?";
}

std::string lambda_mode(const FormTable& form) {
  return form.lambda_value ? to_string(*form.lambda_value) : "symbolic";
}

Json rational_json(const Rational& r) { return to_string(r); }

Json root_json(const Root& r) {
  Json coords = Json::object();
  for (int i = 0; i < r.basis.dim(); ++i) coords[r.basis.symbol(i)] = rational_json(r.coords[static_cast<std::size_t>(i)]);
  return Json{{"coords", coords}, {"k", r.k}, {"sigma", r.sigma}};
}

Root root_from_json(BasisId basis, const Json& j) {
  try {
    if (j.is_string()) return parse_root(basis, j.get<std::string>());
    Root r(basis);
    for (const auto& [sym, val] : j.at("coords").items()) {
      const int i = basis.symbol_index(sym);
      if (i < 0) throw ParseError("unknown symbol " + sym);
      r.coords[static_cast<std::size_t>(i)] =
          val.is_string() ? parse_rational(val.get<std::string>()) : Rational(val.get<std::int64_t>());
    }
    r.k = j.value("k", std::int64_t{0});
    r.sigma = j.value("sigma", std::int64_t{0});
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("root: ") + e.what());
  }
}

namespace {

Json entry(const Root& r, RootKind kind, Parity parity) {
  Json j = root_json(r);
  j["kind"] = to_string(kind);
  j["parity"] = to_string(parity);
  return j;
}

}  // namespace

Json finite_set_json(const FiniteRootSet& set) {
  Json roots = Json::array();
  for (const auto& r : set.roots()) roots.push_back(entry(r, set.kind(r), finite_parity(set.type(), r)));
  return Json{{"type", set.type().label()}, {"ranks", set.type().ranks()}, {"lambda_mode", lambda_mode(set.form())},
              {"roots", roots}};
}

Json window_json(const AffineRootSystem& system, std::int64_t K) {
  Json roots = Json::array();
  for (const auto& r : system.window(K)) roots.push_back(entry(r, classify(system, r), parity(system, r)));
  return Json{{"type", system.type().label()},
              {"ranks", system.type().finite.ranks()},
              {"lambda_mode", lambda_mode(system.form())},
              {"window", K},
              {"roots", roots}};
}

Json system_json(const AffineRootSystem& system) {
  return Json{{"type", type_key(system.type().finite)}, {"lambda", lambda_mode(system.form())}};
}

SystemPtr system_from_json(const Json& j) {
  try {
    const auto type = parse_affine_type(j.at("type").get<std::string>());
    const std::string lam = j.value("lambda", std::string("symbolic"));
    std::optional<Rational> value;
    if (lam != "symbolic") value = parse_rational(lam);
    return make_system(type, value);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("system: ") + e.what());
  }
}

Json config_json(const ClassConfig& c) {
  if (c.hybrid) return Json{{"family", to_string(c.pattern.family)}, {"m", c.pattern.m}, {"t", c.pattern.t}};
  return Json{{"family", to_string(c.plus)}, {"minus", to_string(c.minus)}};
}

namespace {

PatternFamily family_from(const std::string& s) {
  for (auto f : {PatternFamily::FullLN, PatternFamily::FullIN, PatternFamily::DownHybrid, PatternFamily::UpHybrid})
    if (s == to_string(f)) return f;
  throw ParseError("unknown pattern family " + s);
}

}  // namespace

ClassConfig config_from_json(const Json& j) {
  try {
    const PatternFamily f = family_from(j.at("family").get<std::string>());
    if (f == PatternFamily::UpHybrid || f == PatternFamily::DownHybrid) {
      const int t = j.at("t").get<int>();
      if (t < -1 || t > 1) throw ParseError("t must be in {-1,0,1}");
      return ClassConfig::make_hybrid({f, j.at("m").get<std::int64_t>(), t});
    }
    const PatternFamily minus = j.contains("minus") ? family_from(j.at("minus").get<std::string>()) : f;
    return ClassConfig::tight(f, minus);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("config: ") + e.what());
  }
}

Json shadow_json(const Shadow& shadow) {
  const auto& sys = *shadow.system();
  Json classes = Json::array();
  for (std::size_t c = 0; c < sys.real_classes().size(); ++c)
    classes.push_back(Json{{"rep", root_json(sys.direction(sys.real_classes()[c].first))},
                           {"config", config_json(shadow.config(static_cast<int>(c)))}});
  return Json{{"system", system_json(sys)}, {"classes", classes}};
}

Shadow shadow_from_json(const Json& j) {
  try {
    const SystemPtr sys = system_from_json(j.at("system"));
    std::vector<std::optional<ClassConfig>> seen(sys->real_classes().size());
    for (const auto& c : j.at("classes")) {
      const Root rep = sys->canonicalize(root_from_json(sys->basis(), c.at("rep")));
      const int d = sys->direction_index(rep);
      if (d < 0 || !sys->is_real_direction(d)) throw ParseError(rep.to_string() + " is not a real direction");
      const auto [cls, sign] = sys->class_of(d);
      if (sign != 1) throw ParseError(rep.to_string() + " is not a class representative");
      if (seen[static_cast<std::size_t>(cls)]) throw ParseError(rep.to_string() + " listed twice");
      seen[static_cast<std::size_t>(cls)] = config_from_json(c.at("config"));
    }
    std::vector<ClassConfig> configs;
    for (std::size_t c = 0; c < seen.size(); ++c) {
      if (!seen[c]) throw ParseError("missing class " + sys->direction(sys->real_classes()[c].first).to_string());
      configs.push_back(*seen[c]);
    }
    return Shadow(sys, configs);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("shadow: ") + e.what());
  }
}

Json violations_json(const std::vector<ClosureViolation>& v) {
  Json out = Json::array();
  for (const auto& x : v)
    out.push_back(Json{{"alpha", x.alpha.to_string()},
                       {"beta", x.beta.to_string()},
                       {"sum", x.sum.to_string()},
                       {"relation", x.relation},
                       {"expected", to_string(x.expected)},
                       {"found", to_string(x.found)}});
  return out;
}

Json axiom_report_json(const AxiomReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back(Json{{"id", c.id}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return Json{{"all_passed", r.all_passed()}, {"checks", checks}};
}

Json golden_report_json(const GoldenReport& r) {
  Json mism = Json::array();
  for (const auto& m : r.mismatches)
    mism.push_back(Json{{"root", m.root.to_string()}, {"field", m.field}, {"table", m.table}, {"computed", m.computed}});
  return Json{{"type", r.type},
              {"roots_checked", r.roots_checked},
              {"kind_mismatches", r.kind_mismatches},
              {"parity_mismatches", r.parity_mismatches},
              {"passed", r.passed()},
              {"mismatches", mism},
              {"table_entries_not_in_R", r.table_entries_not_in_R},
              {"out_of_basis", r.out_of_basis}};
}

namespace {

Json root_list(const std::vector<Root>& v) {
  Json a = Json::array();
  for (const auto& r : v) a.push_back(r.to_string());
  return a;
}

}  // namespace

Json components_json(const std::vector<ComponentData>& components) {
  Json out = Json::array();
  for (const auto& c : components) {
    std::vector<Root> nz;
    for (const auto& r : c.dot_component.roots())
      if (!r.is_zero()) nz.push_back(r);
    out.push_back(Json{{"index", c.index},
                       {"type", c.label},
                       {"roots", root_list(nz)},
                       {"base", root_list(c.base)},
                       {"theta", c.theta.to_string()},
                       {"coeffs", c.coeffs}});
  }
  return out;
}

Json zeta_json(const LinearFunctional& zeta) {
  Json values = Json::array();
  for (const auto& v : zeta.values()) values.push_back(rational_json(v));
  const BasisId b = zeta.basis().empty() ? BasisId{} : zeta.basis().front().basis;
  return Json{{"basis", root_list(zeta.basis())}, {"values", values}, {"zeta_delta", rational_json(zeta(Root::delta(b)))}};
}

Json functional_report_json(const FunctionalReport& r) {
  return Json{{"ok", r.ok()},
              {"membership_violations", r.membership_violations},
              {"split_violations", r.split_violations},
              {"parabolic", r.parabolic.ok},
              {"parabolic_witness", r.parabolic.witness},
              {"proper", r.proper}};
}

Json pipeline_json(const PipelineResult& r) {
  Json bases = Json::array();
  for (std::size_t i = 0; i < r.bases.size(); ++i) {
    const auto& b = r.bases[i];
    Json strict = Json::array();
    for (bool s : b.B_strict) strict.push_back(s ? "P\\-P" : "P∩-P");
    bases.push_back(Json{{"component", b.component},
                         {"direction", to_string(b.direction)},
                         {"B", root_list(b.B)},
                         {"B_class", strict},
                         {"delta_minus_theta", b.delta_minus_theta.to_string()},
                         {"delta_minus_theta_class", b.dmt_strict ? "P\\-P" : "P∩-P"},
                         {"t", b.t},
                         {"P_parabolic", r.component_parabolic[i].ok},
                         {"P_proper", static_cast<bool>(r.component_proper[i])}});
  }
  Json weights = Json::array();
  for (const auto& w : r.zeta.weights) weights.push_back(rational_json(w));
  return Json{{"system", system_json(*r.system)},
              {"components", components_json(r.components)},
              {"bases", bases},
              {"case", r.zeta.case_number},
              {"weights", weights},
              {"zeta", zeta_json(r.zeta.zeta)},
              {"report", functional_report_json(r.report)}};
}

}  // namespace superroots
