#include "superroots/axioms.hpp"

#include "superroots/errors.hpp"
#include "superroots/linalg.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace superroots {

bool AxiomReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
}

const AxiomCheck& AxiomReport::get(const std::string& id) const {
  for (const auto& c : checks)
    if (c.id == id) return c;
  throw std::out_of_range("no axiom " + id);
}

std::vector<std::string> AxiomReport::failed_ids() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (!c.passed) out.push_back(c.id);
  return out;
}

RootString root_string(const FiniteRootSet& set, const Root& alpha, const Root& beta) {
  const std::int64_t cartan = cartan_integer(beta, alpha, set.form());
  const Vec a = flatten(alpha);
  std::set<std::int64_t> ks;
  for (const auto& g : set.roots()) {
    const auto c = proportionality(flatten(g - beta), a);
    if (c && is_integer(*c)) ks.insert(c->numerator());
    else if (g == beta) ks.insert(0);
  }
  if (ks.empty()) throw NotARoot(beta.to_string() + " not in " + set.type().label());
  RootString out;
  out.p = static_cast<int>(-*ks.begin());
  out.q = static_cast<int>(*ks.rbegin());
  if (static_cast<std::int64_t>(ks.size()) != out.p + out.q + 1)
    throw AxiomViolation("broken " + alpha.to_string() + "-string through " + beta.to_string());
  if (out.p - out.q != cartan)
    throw AxiomViolation(alpha.to_string() + "-string through " + beta.to_string() +
                         ": p - q = " + std::to_string(out.p - out.q) +
                         " but <β,α> = " + std::to_string(cartan));
  for (std::int64_t k = -out.p; k <= out.q; ++k) {
    Root r = beta;
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += alpha.coords[i] * k;
    r.k += alpha.k * k;
    r.sigma += alpha.sigma * k;
    out.string.push_back(r);
  }
  return out;
}

AxiomReport check_supersystem_axioms(const FiniteRootSet& set) {
  AxiomReport rep;
  const auto& T = set.roots();
  const auto& form = set.form();

  AxiomCheck a{"a", "finite, spans, contains 0", true, ""};
  if (!set.contains(Root(set.basis()))) {
    a.passed = false;
    a.detail = "0 not in T";
  }
  rep.checks.push_back(a);

  AxiomCheck b{"b", "T = -T", true, ""};
  for (const auto& r : T)
    if (!set.contains(-r)) {
      b.passed = false;
      b.detail = "-(" + r.to_string() + ") missing";
      break;
    }
  rep.checks.push_back(b);

  std::vector<Root> real, ns;
  for (const auto& r : T) {
    const RootKind k = set.kind(r);
    if (k == RootKind::Real) real.push_back(r);
    else if (k == RootKind::Nonsingular) ns.push_back(r);
  }

  AxiomCheck c{"c", "integrality of <β,α>", true, ""};
  AxiomCheck d{"d", "unbroken root strings", true, ""};
  for (const auto& al : real) {
    for (const auto& be : T) {
      if (c.passed) {
        try {
          (void)cartan_integer(be, al, form);
        } catch (const AxiomViolation& e) {
          c.passed = false;
          c.detail = e.what();
        }
      }
      if (d.passed && c.passed) {
        try {
          (void)root_string(set, al, be);
        } catch (const AxiomViolation& e) {
          d.passed = false;
          d.detail = e.what();
        }
      }
    }
  }
  if (!c.passed && d.passed) d.detail = "skipped where integrality fails";
  rep.checks.push_back(c);
  rep.checks.push_back(d);

  AxiomCheck e{"e", "nonsingular axiom", true, ""};
  for (const auto& al : ns) {
    for (const auto& be : T) {
      if (form_eval(al, be, form).is_zero()) continue;
      if (!set.contains(be - al) && !set.contains(be + al)) {
        e.passed = false;
        e.detail = "α = " + al.to_string() + ", β = " + be.to_string();
        break;
      }
    }
    if (!e.passed) break;
  }
  rep.checks.push_back(e);

  AxiomCheck f{"f", "nondegenerate form on span", true, ""};
  std::vector<Vec> flat;
  for (const auto& r : T) flat.push_back(r.coords);
  std::vector<Root> span;
  for (auto i : independent_subset(flat)) span.push_back(T[i]);
  std::vector<std::vector<Scalar>> gram(span.size(), std::vector<Scalar>(span.size()));
  for (std::size_t i = 0; i < span.size(); ++i)
    for (std::size_t j = 0; j < span.size(); ++j) gram[i][j] = form_eval(span[i], span[j], form);
  const Poly det = determinant(gram);
  if (!nonvanishing_generically(det)) {
    f.passed = false;
    f.detail = det.is_zero() ? "Gram determinant is identically zero"
                             : "Gram determinant vanishes at an admissible λ";
  }
  rep.checks.push_back(f);
  return rep;
}

std::vector<FiniteRootSet> irreducible_components(const FiniteRootSet& set) {
  std::vector<Root> nodes;
  for (const auto& r : set.roots()) {
    const RootKind k = set.kind(r);
    if (k == RootKind::Real || k == RootKind::Nonsingular) nodes.push_back(r);
  }
  const std::size_t n = nodes.size();
  std::vector<int> comp(n, -1);
  int count = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = count;
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < n; ++v) {
        if (comp[v] >= 0) continue;
        if (!form_eval(nodes[u], nodes[v], set.form()).is_zero()) {
          comp[v] = count;
          stack.push_back(v);
        }
      }
    }
    ++count;
  }
  std::vector<FiniteRootSet> out;
  for (int c = 0; c < count; ++c) {
    std::vector<Root> members{Root(set.basis())};
    for (std::size_t i = 0; i < n; ++i)
      if (comp[i] == c) members.push_back(nodes[i]);
    FiniteTypeId t;
    t.family = Family::Pure;
    t.pure_label = set.type().label() + " component " + std::to_string(c + 1);
    out.emplace_back(t, set.form(), std::move(members));
  }
  return out;
}

bool is_finite_root_system(const FiniteRootSet& set, std::string* why) {
  auto fail = [&](const std::string& w) {
    if (why) *why = w;
    return false;
  };
  const auto& form = set.form();
  for (const auto& a : set.roots()) {
    if (a.is_zero()) continue;
    if (form_eval(a, a, form).is_zero()) return fail(a.to_string() + " is isotropic");
    if (!set.contains(-a)) return fail("-(" + a.to_string() + ") missing");
    for (const auto& b : set.roots()) {
      if (b.is_zero() || b == a || b == -a) continue;
      if (auto c = proportionality(flatten(b), flatten(a)))
        return fail("non-reduced: " + b.to_string() + " is a multiple of " + a.to_string());
    }
  }
  for (const auto& a : set.roots()) {
    if (a.is_zero()) continue;
    for (const auto& b : set.roots()) {
      std::int64_t c = 0;
      try {
        c = cartan_integer(b, a, form);
      } catch (const AxiomViolation& e) {
        return fail(e.what());
      }
      if (!set.contains(b - c * a)) return fail("reflection of " + b.to_string() + " in " + a.to_string());
    }
  }
  return true;
}

namespace {

bool lex_positive(const Root& r) {
  for (const auto& c : flatten(r)) {
    if (c > 0) return true;
    if (c < 0) return false;
  }
  return false;
}

}  // namespace

std::vector<Root> find_base(const FiniteRootSet& component) {
  std::string why;
  if (!is_finite_root_system(component, &why)) throw NotAFiniteRootSystem(why);
  std::vector<Root> pos;
  for (const auto& r : component.roots())
    if (lex_positive(r)) pos.push_back(r);
  std::set<Root> pos_set(pos.begin(), pos.end());
  std::vector<Root> base;
  for (const auto& r : pos) {
    bool decomposable = false;
    for (const auto& s : pos) {
      if (s == r) continue;
      if (pos_set.count(r - s)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) base.push_back(r);
  }
  std::sort(base.begin(), base.end(), [](const Root& x, const Root& y) { return y < x; });
  return base;
}

std::optional<std::vector<std::int64_t>> base_coefficients(const std::vector<Root>& base, const Root& r) {
  const auto c = coordinates_in(base, r);
  if (!c) return std::nullopt;
  std::vector<std::int64_t> out;
  bool pos = false, neg = false;
  for (const auto& x : *c) {
    if (!is_integer(x)) return std::nullopt;
    pos = pos || x > 0;
    neg = neg || x < 0;
    out.push_back(x.numerator());
  }
  if (pos && neg) return std::nullopt;
  return out;
}

HighestRoot highest_root(const FiniteRootSet& component, const std::vector<Root>& base) {
  HighestRoot best;
  std::int64_t best_height = -1;
  std::vector<std::vector<std::int64_t>> positives;
  for (const auto& r : component.roots()) {
    if (r.is_zero()) continue;
    auto c = base_coefficients(base, r);
    if (!c) throw NotAFiniteRootSystem(r.to_string() + " is not one-signed in the base");
    std::int64_t h = 0;
    for (auto x : *c) h += x;
    if (h <= 0) continue;
    positives.push_back(*c);
    if (h > best_height) {
      best_height = h;
      best.theta = r;
      best.coeffs = *c;
    }
  }
  for (const auto& c : positives)
    for (std::size_t j = 0; j < c.size(); ++j)
      if (c[j] > best.coeffs[j])
        throw NotAFiniteRootSystem("no unique highest root");
  return best;
}

std::string cartan_label(const FiniteRootSet& component) {
  std::vector<Root> base = find_base(component);
  const std::size_t rank = base.size();
  const std::size_t count = component.size() - 1;  // without 0
  const std::string r = std::to_string(rank);
  if (count == rank * (rank + 1)) return "A" + r;
  if (rank == 2 && count == 12) return "G2";
  if (count == 2 * rank * rank) {
    if (rank == 2) return "B2";
    // B_n has 2n short roots, C_n has 2n long ones.
    std::map<std::string, int> norms;
    for (const auto& x : component.roots())
      if (!x.is_zero()) ++norms[form_eval(x, x, component.form()).to_string()];
    Scalar shortest;
    bool first = true;
    for (const auto& x : component.roots()) {
      if (x.is_zero()) continue;
      const Scalar nx = form_eval(x, x, component.form());
      const Scalar q = scalar_div(nx, first ? nx : shortest);
      if (first || q.constant_part() < 1) shortest = nx;
      first = false;
    }
    return norms[shortest.to_string()] == static_cast<int>(2 * rank) ? "B" + r : "C" + r;
  }
  if (count == 2 * rank * (rank - 1)) return "D" + r;
  if (rank == 4 && count == 48) return "F4";
  return "rank " + r + " (" + std::to_string(count) + " roots)";
}

}  // namespace superroots
