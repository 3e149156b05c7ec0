#include "superroots/zeta.hpp"

#include "superroots/errors.hpp"

namespace superroots {

namespace {

Root flip(const Root& r) {
  Root x = r;
  x.k = -x.k;
  return x;
}

}  // namespace

ZetaResult construct_zeta(const std::vector<CompatibleBase>& bases) {
  if (bases.empty()) throw CaseMismatch("no components");
  const HybridDirection dir = bases.front().direction;
  for (const auto& b : bases)
    if (b.direction != dir) throw CaseMismatch("components differ in direction");
  const bool down = dir == HybridDirection::Down;

  bool any_strict = false, any_loose = false;
  for (const auto& b : bases) (b.dmt_strict ? any_strict : any_loose) = true;
  const bool first_strict = bases.front().dmt_strict;

  ZetaResult out;
  out.direction = dir;
  Rational dmt1;
  std::vector<Rational> w(bases.size(), Rational(1));
  if (!any_strict) {
    out.case_number = 1;
    dmt1 = 0;
  } else if (!any_loose) {
    out.case_number = 2;
    dmt1 = 1;
  } else if (first_strict) {
    out.case_number = 3;
    dmt1 = 1;
    for (std::size_t i = 0; i < bases.size(); ++i) w[i] = bases[i].dmt_strict ? 1 : 2;
  } else {
    out.case_number = 4;
    dmt1 = 0;
    for (std::size_t i = 0; i < bases.size(); ++i) w[i] = bases[i].dmt_strict ? 1 : 2;
  }
  out.weights = w;

  std::vector<Root> basis;
  std::vector<Rational> values;
  for (std::size_t i = 0; i < bases.size(); ++i) {
    const auto& b = bases[i];
    if (b.t == 0)
      throw CaseMismatch("component " + std::to_string(b.component) + " has no base element in P \\ -P");
    for (std::size_t j = 0; j < b.B.size(); ++j) {
      basis.push_back(down ? flip(b.B[j]) : b.B[j]);
      values.push_back(b.B_strict[j] ? w[i] / Rational(b.t * b.coeffs[j]) : Rational(0));
    }
  }
  basis.push_back(down ? flip(bases.front().delta_minus_theta) : bases.front().delta_minus_theta);
  values.push_back(dmt1);

  const LinearFunctional flipped(basis, values);
  const Root delta = Root::delta(basis.front().basis);
  if (flipped(delta) <= Rational(0)) throw CaseMismatch("ζ(δ) <= 0 in case " + std::to_string(out.case_number));
  for (const auto& b : bases) {
    const Rational v = flipped(down ? flip(b.delta_minus_theta) : b.delta_minus_theta);
    if (v != Rational(b.dmt_strict ? 1 : 0))
      throw CaseMismatch("ζ(δ-θ_" + std::to_string(b.component) + ") = " + to_display(v) + " in case " +
                         std::to_string(out.case_number));
  }

  if (down) {
    std::vector<Root> orig;
    for (const auto& r : basis) orig.push_back(flip(r));
    out.zeta = LinearFunctional(orig, values);
  } else {
    out.zeta = flipped;
  }
  out.zeta_delta = out.zeta(delta);
  return out;
}

FunctionalReport verify_functional(const LinearFunctional& zeta, const RootSubset& P, const RootSubset& S,
                                   const Shadow* shadow, std::int64_t K) {
  const auto& sys = S.sys();
  if (zeta(Root::delta(sys.basis())) == Rational(0)) throw InvalidFunctional("ζ(δ) = 0");
  FunctionalReport rep;
  for (const auto& [d, k] : S.window_pairs(K)) {
    const Root a = sys.make_root(d, k);
    const Rational v = zeta(a);
    const bool in_p = P.contains(d, k);
    if (in_p != (v >= Rational(0)))
      rep.membership_violations.push_back(a.to_string() + ": ζ = " + to_display(v) + ", " +
                                          (in_p ? "in P" : "not in P"));
    if (shadow && sys.is_real_direction(d) && v != Rational(0)) {
      const Membership want = v > Rational(0) ? Membership::LN : Membership::IN;
      if (shadow->membership(d, k) != want)
        rep.split_violations.push_back(a.to_string() + ": ζ = " + to_display(v) + " but " +
                                       to_string(shadow->membership(d, k)));
    }
  }
  rep.parabolic = is_parabolic(P, S, K);
  rep.proper = !(P == S);
  return rep;
}

}  // namespace superroots
