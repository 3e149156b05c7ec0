#include "superroots/shadow.hpp"

#include "superroots/errors.hpp"

namespace superroots {

const char* to_string(Membership m) { return m == Membership::LN ? "ln" : "in"; }

const char* to_string(PatternFamily f) {
  switch (f) {
    case PatternFamily::FullLN: return "FullLN";
    case PatternFamily::FullIN: return "FullIN";
    case PatternFamily::DownHybrid: return "DownHybrid";
    case PatternFamily::UpHybrid: return "UpHybrid";
  }
  return "?";
}

const char* to_string(Uniformity u) {
  switch (u) {
    case Uniformity::AllUp: return "AllUp";
    case Uniformity::AllDown: return "AllDown";
    case Uniformity::Mixed: return "Mixed";
    case Uniformity::NoneHybrid: return "NoneHybrid";
  }
  return "?";
}

bool operator==(const LinePattern& a, const LinePattern& b) {
  if (a.family != b.family) return false;
  if (a.family == PatternFamily::FullLN || a.family == PatternFamily::FullIN) return true;
  return a.m == b.m && a.t == b.t;
}

ClassConfig ClassConfig::make_hybrid(LinePattern p) {
  if (p.family != PatternFamily::UpHybrid && p.family != PatternFamily::DownHybrid)
    throw NotAShadowPattern("hybrid config needs an Up or Down family");
  if (p.t < -1 || p.t > 1) throw NotAShadowPattern("t must lie in {-1,0,1}");
  ClassConfig c;
  c.hybrid = true;
  c.pattern = p;
  return c;
}

ClassConfig ClassConfig::tight(PatternFamily plus, PatternFamily minus) {
  auto full = [](PatternFamily f) { return f == PatternFamily::FullLN || f == PatternFamily::FullIN; };
  if (!full(plus) || !full(minus)) throw NotAShadowPattern("tight config needs FullLN/FullIN");
  ClassConfig c;
  c.plus = plus;
  c.minus = minus;
  return c;
}

IntervalSet ClassConfig::ln_set(int sign) const {
  if (!hybrid) {
    const PatternFamily f = sign > 0 ? plus : minus;
    return f == PatternFamily::FullLN ? IntervalSet::all() : IntervalSet();
  }
  const auto m = pattern.m;
  const auto t = pattern.t;
  if (pattern.family == PatternFamily::UpHybrid)
    return sign > 0 ? IntervalSet::at_least(m) : IntervalSet::at_least(1 - t - m);
  return sign > 0 ? IntervalSet::at_most(m) : IntervalSet::at_most(t - m - 1);
}

bool operator==(const ClassConfig& a, const ClassConfig& b) {
  if (a.hybrid != b.hybrid) return false;
  if (a.hybrid) return a.pattern == b.pattern;
  return a.plus == b.plus && a.minus == b.minus;
}

std::string ClassConfig::to_string() const {
  if (hybrid)
    return std::string(superroots::to_string(pattern.family)) + "{m=" + std::to_string(pattern.m) +
           ",t=" + std::to_string(pattern.t) + "}";
  return std::string("(") + superroots::to_string(plus) + ", " + superroots::to_string(minus) + ")";
}

bool is_hybrid(const ClassConfig& c) { return c.hybrid; }
bool is_tight(const ClassConfig& c) { return !c.hybrid; }

Shadow::Shadow(SystemPtr system, std::vector<ClassConfig> configs)
    : sys_(std::move(system)), configs_(std::move(configs)) {
  if (configs_.size() != sys_->real_classes().size())
    throw NotAShadowPattern("need one config per real class (" +
                            std::to_string(sys_->real_classes().size()) + ")");
}

Shadow Shadow::uniform(SystemPtr system, const ClassConfig& c) {
  const std::size_t n = system->real_classes().size();
  return Shadow(std::move(system), std::vector<ClassConfig>(n, c));
}

IntervalSet Shadow::ln_set(int dir) const {
  const auto [cls, sign] = sys_->class_of(dir);
  if (cls < 0) throw NotRealRoot(sys_->direction(dir).to_string() + " is not real");
  return config(cls).ln_set(sign);
}

Membership Shadow::membership(int dir, std::int64_t k) const {
  return ln_set(dir).contains(k) ? Membership::LN : Membership::IN;
}

Membership membership(const Shadow& shadow, const Root& alpha) {
  const int d = shadow.system()->direction_index(alpha);
  if (d < 0 || !shadow.system()->is_real_direction(d))
    throw NotRealRoot(alpha.to_string() + " is not a real root");
  return shadow.membership(d, alpha.k);
}

IntervalSet LineOracle::ln_set() const {
  IntervalSet s;
  if (below == Membership::LN) s = s.unite(IntervalSet::at_most(lo - 1));
  if (above == Membership::LN) s = s.unite(IntervalSet::at_least(hi + 1));
  for (auto k = lo; k <= hi; ++k)
    if (at(k) == Membership::LN) s.insert(k);
  return s;
}

LineOracle LineOracle::of(const IntervalSet& ln, std::int64_t lo, std::int64_t hi) {
  LineOracle o;
  o.at = [ln](std::int64_t k) { return ln.contains(k) ? Membership::LN : Membership::IN; };
  o.lo = lo;
  o.hi = hi;
  o.below = ln.contains(lo - 1) ? Membership::LN : Membership::IN;
  o.above = ln.contains(hi + 1) ? Membership::LN : Membership::IN;
  return o;
}

namespace {

enum class Shape { All, None, Up, Down, Other };

Shape shape_of(const IntervalSet& s, std::int64_t& threshold) {
  if (s.empty()) return Shape::None;
  if (s.is_all()) return Shape::All;
  if (s.intervals().size() != 1) return Shape::Other;
  const auto [lo, hi] = s.intervals()[0];
  if (hi == IntervalSet::kPosInf) {
    threshold = lo;
    return Shape::Up;
  }
  if (lo == IntervalSet::kNegInf) {
    threshold = hi;
    return Shape::Down;
  }
  return Shape::Other;
}

}  // namespace

ClassConfig classify_line(const IntervalSet& plus_ln, const IntervalSet& minus_ln) {
  std::int64_t a = 0, b = 0;
  const Shape sp = shape_of(plus_ln, a);
  const Shape sm = shape_of(minus_ln, b);
  auto fail = [&](const std::string& why) -> ClassConfig {
    throw NotAShadowPattern(why + " (+: " + plus_ln.to_string() + ", -: " + minus_ln.to_string() + ")");
  };
  auto full = [](Shape s) { return s == Shape::All ? PatternFamily::FullLN : PatternFamily::FullIN; };
  const bool tp = sp == Shape::All || sp == Shape::None;
  const bool tm = sm == Shape::All || sm == Shape::None;
  if (tp && tm) return ClassConfig::tight(full(sp), full(sm));
  if (sp == Shape::Up && sm == Shape::Up) {
    const std::int64_t t = 1 - b - a;
    if (t < -1 || t > 1) return fail("up thresholds not coupled with t in {-1,0,1}");
    return ClassConfig::make_hybrid(LinePattern::up(a, static_cast<int>(t)));
  }
  if (sp == Shape::Down && sm == Shape::Down) {
    const std::int64_t t = b + a + 1;
    if (t < -1 || t > 1) return fail("down thresholds not coupled with t in {-1,0,1}");
    return ClassConfig::make_hybrid(LinePattern::down(a, static_cast<int>(t)));
  }
  if (sp == Shape::Other || sm == Shape::Other) return fail("not a threshold assignment");
  return fail("lines do not form one family");
}

ClassConfig classify_line(const LineOracle& plus, const LineOracle& minus) {
  return classify_line(plus.ln_set(), minus.ln_set());
}

std::vector<ClosureViolation> check_closure_38(const Shadow& shadow, std::int64_t K) {
  const auto& sys = *shadow.system();
  const int D = sys.direction_count();
  std::vector<IntervalSet> ln(static_cast<std::size_t>(D));
  std::vector<std::pair<int, std::int64_t>> elems;
  for (int d = 0; d < D; ++d) {
    if (!sys.is_real_direction(d)) continue;
    ln[static_cast<std::size_t>(d)] = shadow.ln_set(d);
    for (auto k : ln[static_cast<std::size_t>(d)].elements_in(-K, K)) elems.emplace_back(d, k);
  }
  std::vector<ClosureViolation> out;
  auto check = [&](int a, std::int64_t ka, int b, std::int64_t kb, int s, std::int64_t ks, const char* rel) {
    if (s < 0 || !sys.is_real_direction(s)) return;
    if (ln[static_cast<std::size_t>(s)].contains(ks)) return;
    out.push_back({sys.make_root(a, ka), sys.make_root(b, kb), sys.make_root(s, ks), rel,
                   Membership::LN, Membership::IN});
  };
  for (const auto& [a, ka] : elems)
    for (const auto& [b, kb] : elems) {
      check(a, ka, b, kb, sys.sum_index(a, b), ka + kb, "a+b");
      check(a, ka, b, kb, sys.sum2_index(a, b), ka + 2 * kb, "a+2b");
    }
  return out;
}

Uniformity uniform_hybrid_check(const Shadow& shadow, const RootSubset& S) {
  const auto& sys = *shadow.system();
  bool up = false, down = false;
  for (std::size_t c = 0; c < sys.real_classes().size(); ++c) {
    const auto [rep, neg] = sys.real_classes()[c];
    if (S.line(rep).empty() && S.line(neg).empty()) continue;
    const ClassConfig& cfg = shadow.config(static_cast<int>(c));
    if (!cfg.hybrid) continue;
    (cfg.pattern.family == PatternFamily::UpHybrid ? up : down) = true;
  }
  if (up && down) return Uniformity::Mixed;
  if (up) return Uniformity::AllUp;
  if (down) return Uniformity::AllDown;
  return Uniformity::NoneHybrid;
}

Shadow shadow_from_functional(SystemPtr system, const LinearFunctional& zeta) {
  const Rational zd = zeta.at_delta();
  if (zd == 0) throw InvalidFunctional("ζ(δ) = 0");
  std::vector<ClassConfig> configs;
  for (const auto& [rep, neg] : system->real_classes()) {
    (void)neg;
    const Rational x = zeta(system->direction(rep)) / zd;
    if (is_integer(x))
      throw InvalidFunctional("ζ vanishes on " + system->direction(rep).shifted(-x.numerator()).to_string());
    // ζ(β̇ + kδ) > 0 iff k > -x (ζ(δ) > 0) or k < -x (ζ(δ) < 0); x is not an integer.
    if (zd > 0) configs.push_back(ClassConfig::make_hybrid(LinePattern::up(floor_of(-x) + 1, 0)));
    else configs.push_back(ClassConfig::make_hybrid(LinePattern::down(ceil_of(-x) - 1, 0)));
  }
  return Shadow(std::move(system), std::move(configs));
}

}  // namespace superroots
