#include "cli.hpp"

#include "superroots/errors.hpp"
#include "superroots/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

namespace superroots::cli {

namespace {

struct Options {
  std::string type;
  std::optional<int> m, n;
  std::string lambda = "symbolic";
  std::int64_t window = 5;
  bool json = false;
  std::string output;
  std::string input;
  std::string root;
  std::string scenario;
  std::string patterns;
};

class Usage : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string type_text(const Options& o) {
  if (o.type.empty()) throw Usage("--type is required");
  std::string t = o.type;
  if (o.m) t += "," + std::to_string(*o.m);
  if (o.n) t += "," + std::to_string(*o.n);
  return t;
}

std::optional<Rational> lambda_value(const Options& o) {
  if (o.lambda == "symbolic") return std::nullopt;
  const Rational v = parse_rational(o.lambda);
  if (v == Rational(0) || v == Rational(-1)) throw Usage("--lambda must avoid 0 and -1");
  return v;
}

SystemPtr affine_system(const Options& o) { return make_system(parse_affine_type(type_text(o)), lambda_value(o)); }

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.output);
  if (!f) throw Usage("cannot write " + o.output);
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// Pattern list "up:0:1,down:-1:0".
std::vector<LinePattern> parse_patterns(const std::string& s) {
  std::vector<LinePattern> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::stringstream is(item);
    std::string fam, m, t;
    std::getline(is, fam, ':');
    std::getline(is, m, ':');
    std::getline(is, t, ':');
    try {
      const int tv = std::stoi(t);
      if (tv < -1 || tv > 1) throw Usage("t must be in {-1,0,1}: " + item);
      if (fam == "up") out.push_back(LinePattern::up(std::stoll(m), tv));
      else if (fam == "down") out.push_back(LinePattern::down(std::stoll(m), tv));
      else throw Usage("pattern family must be up or down: " + item);
    } catch (const std::logic_error&) {
      throw Usage("bad pattern " + item);
    }
  }
  return out;
}

int cmd_build(const Options& o, std::ostream& out) {
  const auto t = parse_finite_type(type_text(o));
  emit(o, out, dump(finite_set_json(build_finite(t, lambda_value(o)))));
  return 0;
}

int cmd_export(const Options& o, std::ostream& out) {
  if (!o.scenario.empty()) {
    const auto sc = find_scenario(o.scenario);
    const auto sys = make_system(sc.type);
    const auto comps = decompose(even_part(sys), o.window);
    emit(o, out, dump(shadow_json(component_shadow(sys, comps, sc.patterns))));
    return 0;
  }
  emit(o, out, dump(window_json(*affine_system(o), o.window)));
  return 0;
}

int cmd_classify(const Options& o, std::ostream& out) {
  if (o.root.empty()) throw Usage("--root is required");
  const auto sys = affine_system(o);
  Root r;
  try {
    r = sys->canonicalize(parse_root(sys->basis(), o.root));
  } catch (const Error& e) {
    throw Usage(e.what());
  }
  const RootKind k = classify(*sys, r);
  const Parity p = parity(*sys, r);
  if (o.json) emit(o, out, dump(Json{{"root", r.to_string()}, {"kind", to_string(k)}, {"parity", to_string(p)}}));
  else emit(o, out, r.to_string() + ": " + to_string(k) + " " + to_string(p) + "\n");
  return 0;
}

int cmd_axioms(const Options& o, std::ostream& out) {
  const auto set = build_finite(parse_finite_type(type_text(o)), lambda_value(o));
  const auto rep = check_supersystem_axioms(set);
  if (o.json) {
    Json j = axiom_report_json(rep);
    j["type"] = set.type().label();
    emit(o, out, dump(j));
  } else {
    std::string s = "type " + set.type().label() + "\n";
    for (const auto& c : rep.checks)
      s += "(" + c.id + ") " + c.name + ": " + (c.passed ? "PASS" : "FAIL") + (c.detail.empty() ? "" : "  " + c.detail) + "\n";
    emit(o, out, s);
  }
  return rep.all_passed() ? 0 : 1;
}

int cmd_shadow_validate(const Options& o, std::ostream& out) {
  if (o.input.empty()) throw Usage("--input is required");
  std::ifstream f(o.input);
  if (!f) throw Usage("cannot read " + o.input);
  Json j;
  try {
    j = Json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw Usage(std::string("invalid JSON: ") + e.what());
  }
  const Shadow sh = shadow_from_json(j);
  const auto v = check_closure_38(sh, o.window);
  emit(o, out, dump(Json{{"window", o.window}, {"violations", violations_json(v)}}));
  return v.empty() ? 0 : 1;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  const auto sys = affine_system(o);
  const auto comps = decompose(even_part(sys), std::max<std::int64_t>(o.window, 4));
  if (o.json) {
    emit(o, out, dump(Json{{"system", system_json(*sys)}, {"components", components_json(comps)}}));
    return 0;
  }
  std::string s = "R0 of " + sys->type().label() + ": " + std::to_string(comps.size()) + " components\n";
  for (const auto& c : comps) {
    s += "component " + std::to_string(c.index) + ": " + c.label + "  base {";
    for (std::size_t i = 0; i < c.base.size(); ++i) s += (i ? ", " : "") + c.base[i].to_string();
    s += "}  theta " + c.theta.to_string() + "\n";
  }
  emit(o, out, s);
  return 0;
}

int cmd_zeta(const Options& o, std::ostream& out) {
  SystemPtr sys;
  std::vector<LinePattern> patterns;
  Json head = Json::object();
  if (!o.scenario.empty()) {
    const auto sc = find_scenario(o.scenario);
    sys = make_system(sc.type);
    patterns = sc.patterns;
    head["scenario"] = sc.name;
  } else {
    if (o.patterns.empty()) throw Usage("zeta needs --scenario or --type with --patterns");
    sys = affine_system(o);
    patterns = parse_patterns(o.patterns);
    head["scenario"] = "custom";
  }
  const auto r = run_pipeline(sys, patterns, o.window);
  head["window"] = o.window;
  const Json body = pipeline_json(r);
  for (const auto& [k, v] : body.items()) head[k] = v;
  emit(o, out, dump(head));
  return r.ok() ? 0 : 1;
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
  return s.empty() ? "-" : s;
}

int cmd_tables(const Options& o, std::ostream& out) {
  const auto sys = affine_system(o);
  const auto rep = compare_with_tables(*sys, o.window);
  if (o.json) {
    Json j = golden_report_json(rep);
    j["window"] = o.window;
    emit(o, out, dump(j));
    return rep.passed() ? 0 : 1;
  }
  std::vector<std::string> imag, real, nonsing, even, odd;
  for (int d = 0; d < sys->direction_count(); ++d) {
    const std::string r = sys->direction(d).to_string();
    switch (sys->direction_kind(d)) {
      case RootKind::Real: real.push_back(r); break;
      case RootKind::Nonsingular: nonsing.push_back(r); break;
      default: imag.push_back(r); break;
    }
    (sys->direction_parity(d) == Parity::Even ? even : odd).push_back(r);
  }
  std::string s = sys->type().label() + "  (directions; each carries +Zδ)\n";
  s += "Imaginary:   " + join(imag) + "\n";
  s += "Real:        " + join(real) + "\n";
  s += "Nonsingular: " + join(nonsing) + "\n";
  s += "Even:        " + join(even) + "\n";
  s += "Odd:         " + join(odd) + "\n";
  s += "golden |k| <= " + std::to_string(o.window) + ": " + std::to_string(rep.roots_checked) + " roots, " +
       std::to_string(rep.kind_mismatches) + " kind mismatches, " + std::to_string(rep.parity_mismatches) +
       " parity mismatches\n";
  const std::size_t shown = std::min<std::size_t>(rep.mismatches.size(), 20);
  for (std::size_t i = 0; i < shown; ++i) {
    const auto& m = rep.mismatches[i];
    s += "  " + m.root.to_string() + " " + m.field + ": table " + m.table + ", computed " + m.computed + "\n";
  }
  if (shown < rep.mismatches.size()) s += "  ... " + std::to_string(rep.mismatches.size() - shown) + " more\n";
  if (!rep.table_entries_not_in_R.empty()) s += "table entries not in R: " + join(rep.table_entries_not_in_R) + "\n";
  if (!rep.out_of_basis.empty()) s += "table entries outside the basis: " + join(rep.out_of_basis) + "\n";
  emit(o, out, s);
  return rep.passed() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Root systems of affine Lie superalgebras"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* c, bool typed) {
    if (typed) {
      c->add_option("--type", o.type, "Type, e.g. B,1,1 or D21L");
      c->add_option("--m", o.m, "First rank");
      c->add_option("--n", o.n, "Second rank");
      c->add_option("--lambda", o.lambda, "symbolic or p/q");
    }
    c->add_option("--window", o.window, "Window K on the δ multiple")->check(CLI::NonNegativeNumber);
    c->add_flag("--json", o.json, "JSON output");
    c->add_option("--output", o.output, "Output path");
  };
  auto* build = app.add_subcommand("build", "Finite root set as JSON");
  common(build, true);
  auto* classify_cmd = app.add_subcommand("classify", "Kind and parity of one root");
  common(classify_cmd, true);
  classify_cmd->add_option("--root", o.root, "Root, e.g. e1-d1+3delta");
  auto* axioms = app.add_subcommand("axioms", "Generalized root system axioms");
  common(axioms, true);
  auto* validate = app.add_subcommand("shadow-validate", "Closure check of a shadow");
  common(validate, false);
  validate->add_option("--input", o.input, "Shadow JSON");
  auto* decomp = app.add_subcommand("decompose", "Components of R0");
  common(decomp, true);
  auto* zeta = app.add_subcommand("zeta", "Functional for a hybrid scenario");
  common(zeta, true);
  zeta->add_option("--scenario", o.scenario, "Named scenario, e.g. d21l-case3");
  zeta->add_option("--patterns", o.patterns, "Per component: up:m:t or down:m:t, comma separated");
  auto* tables = app.add_subcommand("tables", "Kinds and parities against the printed tables");
  common(tables, true);
  auto* exp = app.add_subcommand("export", "Root window or scenario shadow as JSON");
  common(exp, true);
  exp->add_option("--scenario", o.scenario, "Export this scenario's shadow instead");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*build) return cmd_build(o, out);
    if (*classify_cmd) return cmd_classify(o, out);
    if (*axioms) return cmd_axioms(o, out);
    if (*validate) return cmd_shadow_validate(o, out);
    if (*decomp) return cmd_decompose(o, out);
    if (*zeta) return cmd_zeta(o, out);
    if (*tables) return cmd_tables(o, out);
    if (*exp) return cmd_export(o, out);
  } catch (const Usage& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const UnknownType& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const RankError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace superroots::cli
