#include "superroots/decompose.hpp"

#include "superroots/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <tuple>

namespace superroots {

const char* to_string(HybridDirection d) { return d == HybridDirection::Up ? "up" : "down"; }

std::vector<ComponentData> decompose(const RootSubset& S, std::int64_t K) {
  const auto& sys = S.sys();
  if (auto c = is_symmetric_closed(S, K); !c) throw HypothesisViolated(c.witness);

  bool has_real = false;
  std::vector<Root> dot{Root(sys.basis())};
  for (int d : S.directions()) {
    if (sys.is_real_direction(d)) has_real = true;
    if (d == sys.zero_direction() || sys.direction_parity(d) != Parity::Even) continue;
    if (!S.line(d).is_all())
      throw HypothesisViolated("(" + sys.direction(d).to_string() + " + Zδ) ∩ R₀ not contained in S");
    dot.push_back(sys.direction(d));
  }
  if (!has_real) throw HypothesisViolated("S has no real roots");

  FiniteTypeId t;
  t.family = Family::Pure;
  t.pure_label = "Ṡ";
  const FiniteRootSet sdot(t, sys.form(), dot);
  std::string why;
  if (!is_finite_root_system(sdot, &why)) throw HypothesisViolated("Ṡ is not a finite root system: " + why);

  std::vector<ComponentData> out;
  int idx = 0;
  for (auto& comp : irreducible_components(sdot)) {
    ComponentData c{++idx, comp, RootSubset(S.system()), {}, Root(), {}, ""};
    c.affine_part.set_line(sys.zero_direction(), IntervalSet::all());
    for (const auto& r : comp.roots()) {
      if (r.is_zero()) continue;
      c.affine_part.set_line(sys.direction_index(r), IntervalSet::all());
    }
    c.base = find_base(comp);
    const auto hr = highest_root(comp, c.base);
    c.theta = hr.theta;
    c.coeffs = hr.coeffs;
    c.label = cartan_label(comp);
    out.push_back(std::move(c));
  }
  return out;
}

PSet build_P(const ComponentData& component, const Shadow& shadow) {
  const auto& sys = *shadow.system();
  const RootSubset& Si = component.affine_part;
  std::optional<HybridDirection> dir;
  for (int d : Si.directions()) {
    if (!sys.is_real_direction(d)) continue;
    const auto [cls, sign] = sys.class_of(d);
    (void)sign;
    const ClassConfig& cfg = shadow.config(cls);
    if (!cfg.hybrid)
      throw NotUniformlyHybrid("class of " + sys.direction(d).to_string() + " is tight");
    const HybridDirection here =
        cfg.pattern.family == PatternFamily::UpHybrid ? HybridDirection::Up : HybridDirection::Down;
    if (dir && *dir != here)
      throw NotUniformlyHybrid("component " + std::to_string(component.index) + " mixes up and down classes");
    dir = here;
  }
  if (!dir) throw NotUniformlyHybrid("component has no real classes");

  RootSubset P(shadow.system());
  for (int d : Si.directions()) {
    if (d == sys.zero_direction()) {
      P.set_line(d, *dir == HybridDirection::Up ? IntervalSet::at_least(0) : IntervalSet::at_most(0));
      continue;
    }
    // ln part of this line, plus negatives of in roots on the opposite line.
    const IntervalSet ln = shadow.ln_set(d);
    const IntervalSet opposite_in = shadow.ln_set(sys.negation(d)).complement();
    P.set_line(d, Si.line(d).intersect(ln.unite(opposite_in.negated())));
  }
  return {P, *dir};
}

std::vector<Root> CompatibleBase::pi() const {
  std::vector<Root> out = B;
  out.push_back(delta_minus_theta);
  return out;
}

namespace {

Root flip(const Root& r) {
  Root x = r;
  x.k = -x.k;
  return x;
}

// Weyl orbit of a base under reflections in its own elements.
std::vector<std::vector<Root>> weyl_orbit(const std::vector<Root>& base, const FormTable& form) {
  std::set<std::vector<Root>> seen{base};
  std::vector<std::vector<Root>> order{base};
  for (std::size_t at = 0; at < order.size(); ++at) {
    const auto cur = order[at];
    for (const auto& a : cur) {
      std::vector<Root> next;
      for (const auto& b : cur) next.push_back(b - cartan_integer(b, a, form) * a);
      if (seen.insert(next).second) order.push_back(next);
    }
  }
  return order;
}

}  // namespace

CompatibleBase find_compatible_base(const ComponentData& component, const PSet& Pin) {
  const auto& sys = Pin.set.sys();
  const bool down = Pin.direction == HybridDirection::Down;
  // Work in the frame where the component is up-hybrid.
  RootSubset P(Pin.set.system());
  for (int d : Pin.set.directions()) P.set_line(d, down ? Pin.set.line(d).negated() : Pin.set.line(d));

  // Every nonzero line of P must be an up-ray [T_d, +inf).
  struct Line {
    Root dir;
    std::int64_t threshold;
  };
  std::vector<Line> lines;
  std::int64_t horizon = 0;
  for (const auto& r : component.dot_component.roots()) {
    if (r.is_zero()) continue;
    const IntervalSet& l = P.line(sys.direction_index(r));
    if (l.empty() || l.intervals().size() != 1 || l.intervals()[0].second != IntervalSet::kPosInf ||
        l.intervals()[0].first == IntervalSet::kNegInf)
      throw NoCompatibleBase("P line along " + r.to_string() + " is " + l.to_string());
    lines.push_back({r, l.intervals()[0].first});
    horizon = std::max(horizon, std::abs(l.intervals()[0].first));
  }
  horizon += 2;

  const auto& form = component.dot_component.form();
  const auto orbit = weyl_orbit(component.base, form);
  const std::size_t rank = component.base.size();

  std::optional<CompatibleBase> best;
  std::tuple<int, std::int64_t> best_key{-1, 0};
  std::size_t searched = 0;

  for (const auto& Bp : orbit) {
    std::vector<std::vector<std::int64_t>> coef;
    for (const auto& ln : lines) coef.push_back(*base_coefficients(Bp, ln.dir));
    const auto hr = highest_root(component.dot_component, Bp);

    std::vector<std::int64_t> s(rank, -horizon);
    while (true) {
      ++searched;
      bool ok = true;
      for (std::size_t i = 0; i < lines.size() && ok; ++i) {
        std::int64_t T = 0;
        bool positive = false;
        for (std::size_t j = 0; j < rank; ++j) {
          T += coef[i][j] * s[j];
          positive = positive || coef[i][j] > 0;
        }
        if (!positive) T += 1;
        ok = T >= lines[i].threshold;
      }
      if (ok) {
        CompatibleBase cb;
        cb.component = component.index;
        cb.direction = Pin.direction;
        cb.finite_base = Bp;
        cb.shifts = s;
        cb.coeffs = hr.coeffs;
        std::int64_t shift_theta = 0;
        std::int64_t maxs = 0;
        for (std::size_t j = 0; j < rank; ++j) {
          cb.B.push_back(Bp[j].shifted(s[j]));
          shift_theta += hr.coeffs[j] * s[j];
          maxs = std::max(maxs, std::abs(s[j]));
        }
        cb.delta_minus_theta = (-hr.theta).shifted(1 - shift_theta);
        auto strict = [&](const Root& x) { return !P.contains(-x); };
        for (const auto& b : cb.B) {
          cb.B_strict.push_back(strict(b));
          cb.t += strict(b) ? 1 : 0;
        }
        cb.dmt_strict = strict(cb.delta_minus_theta);
        const std::tuple<int, std::int64_t> key{cb.t, -maxs};
        if (!best || key > best_key) {
          best = cb;
          best_key = key;
        }
      }
      std::size_t j = 0;
      while (j < rank && s[j] == horizon) s[j++] = -horizon;
      if (j == rank) break;
      ++s[j];
    }
  }
  if (!best)
    throw NoCompatibleBase("component " + std::to_string(component.index) + ": " + std::to_string(searched) +
                           " candidates searched");
  best->searched = searched;
  if (down) {
    for (auto& b : best->B) b = flip(b);
    best->delta_minus_theta = flip(best->delta_minus_theta);
  }
  return *best;
}

}  // namespace superroots
