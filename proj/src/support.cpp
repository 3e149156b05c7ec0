#include "superroots/support.hpp"

#include "superroots/errors.hpp"
#include "superroots/interval_set.hpp"
#include "superroots/linalg.hpp"

namespace superroots {

int SupportSet::add_axis(const Root& u) {
  if (u.is_zero()) throw DirectionNotDecidable("zero axis");
  axes.push_back(u);
  return static_cast<int>(axes.size()) - 1;
}

void SupportSet::add_point(const Root& p) { items.push_back({p, -1, RayKind::Point}); }

void SupportSet::add(const Root& anchor, int axis, RayKind kind) {
  if (kind != RayKind::Point && (axis < 0 || axis >= static_cast<int>(axes.size())))
    throw DirectionNotDecidable("undeclared axis");
  items.push_back({anchor, kind == RayKind::Point ? -1 : axis, kind});
}

namespace {

IntervalSet params(RayKind k) {
  switch (k) {
    case RayKind::Point: return IntervalSet::point(0);
    case RayKind::Up: return IntervalSet::at_least(0);
    case RayKind::Down: return IntervalSet::at_most(0);
    case RayKind::Line: return IntervalSet::all();
  }
  return {};
}

// Integer s with v = s*u, if any.
std::optional<std::int64_t> integer_multiple(const Root& v, const Root& u) {
  if (v.is_zero()) return 0;
  auto c = proportionality(flatten(v), flatten(u));
  if (!c || !is_integer(*c)) return std::nullopt;
  return c->numerator();
}

bool item_contains(const SupportSet& supp, const Descriptor& d, const Root& p) {
  if (d.kind == RayKind::Point) return p == d.anchor;
  const auto s = integer_multiple(p - d.anchor, supp.axes[static_cast<std::size_t>(d.axis)]);
  return s && params(d.kind).contains(*s);
}

// Parameters s in `range` with base + s*u covered by the support.
IntervalSet covered(const SupportSet& supp, const Root& base, const Root& u, const IntervalSet& range) {
  IntervalSet cov;
  for (const auto& d : supp.items) {
    if (d.kind == RayKind::Point) {
      if (auto s = integer_multiple(d.anchor - base, u)) cov.insert(*s);
      continue;
    }
    const Root& w = supp.axes[static_cast<std::size_t>(d.axis)];
    const IntervalSet pd = params(d.kind);
    if (auto c = proportionality(flatten(w), flatten(u))) {
      // Parallel: base + s u = a + s' w requires base - a on the common line.
      if (*c != 1 && *c != -1)
        throw DirectionNotDecidable("parallel axes " + u.to_string() + " and " + w.to_string());
      const auto r = integer_multiple(d.anchor - base, u);
      if (!r) continue;
      // s = r + c s'
      cov = cov.unite((*c == 1 ? pd : pd.negated()).shifted(*r));
      continue;
    }
    // Transversal: at most one common point.
    auto sol = coordinates_in({u, -w}, d.anchor - base);
    if (!sol) continue;
    const Rational s = (*sol)[0], sp = (*sol)[1];
    if (is_integer(s) && is_integer(sp) && pd.contains(sp.numerator())) cov.insert(s.numerator());
  }
  return range.intersect(cov);
}

}  // namespace

bool SupportSet::contains(const Root& p) const {
  for (const auto& d : items)
    if (item_contains(*this, d, p)) return true;
  return false;
}

bool in_frak_B(const SupportSet& supp, const Root& alpha) {
  if (alpha.is_zero()) return supp.items.empty();
  for (const auto& d : supp.items) {
    if (d.kind == RayKind::Point) continue;
    const auto c = proportionality(flatten(alpha), flatten(supp.axes[static_cast<std::size_t>(d.axis)]));
    if (!c) continue;
    const bool forward = *c > 0;
    if (d.kind == RayKind::Line || (forward && d.kind == RayKind::Up) || (!forward && d.kind == RayKind::Down))
      return false;
  }
  return true;
}

bool in_frak_C(const SupportSet& supp, const Root& alpha) {
  if (alpha.is_zero()) return true;
  for (const auto& d : supp.items) {
    const Root base = d.anchor + alpha;
    if (d.kind == RayKind::Point) {
      if (!supp.contains(base)) return false;
      continue;
    }
    const Root& u = supp.axes[static_cast<std::size_t>(d.axis)];
    const IntervalSet need = params(d.kind);
    if (!(covered(supp, base, u, need) == need)) return false;
  }
  return true;
}

}  // namespace superroots
