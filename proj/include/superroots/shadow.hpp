#pragma once

#include "superroots/affine.hpp"
#include "superroots/functional.hpp"
#include "superroots/interval_set.hpp"
#include "superroots/subset.hpp"

#include <functional>
#include <string>
#include <vector>

namespace superroots {

enum class Membership { LN, IN };
const char* to_string(Membership m);

enum class PatternFamily { FullLN, FullIN, DownHybrid, UpHybrid };
const char* to_string(PatternFamily f);

/// One of the four line families. m and t matter only for the hybrids.
///
/// UpHybrid{m,t}:   β̇+kδ ln iff k >= m;   -β̇+jδ ln iff j >= 1-t-m
/// DownHybrid{m,t}: β̇+kδ ln iff k <= m;   -β̇+jδ ln iff j <= t-m-1
struct LinePattern {
  PatternFamily family = PatternFamily::FullLN;
  std::int64_t m = 0;
  int t = 0;

  static LinePattern up(std::int64_t m, int t) { return {PatternFamily::UpHybrid, m, t}; }
  static LinePattern down(std::int64_t m, int t) { return {PatternFamily::DownHybrid, m, t}; }

  friend bool operator==(const LinePattern& a, const LinePattern& b);
};

/// Either one hybrid pattern covering ±β̇, or independent FullLN/FullIN on
/// each of the two lines.
struct ClassConfig {
  bool hybrid = false;
  LinePattern pattern;  // hybrid only
  PatternFamily plus = PatternFamily::FullLN;
  PatternFamily minus = PatternFamily::FullLN;

  static ClassConfig make_hybrid(LinePattern p);
  static ClassConfig tight(PatternFamily plus, PatternFamily minus);

  /// k with ±β̇ + kδ ln; sign is +1 for the representative.
  IntervalSet ln_set(int sign) const;

  friend bool operator==(const ClassConfig& a, const ClassConfig& b);
  std::string to_string() const;
};

bool is_hybrid(const ClassConfig& c);
bool is_tight(const ClassConfig& c);

/// Assignment of a ClassConfig to every real class {±β̇} of a system.
class Shadow {
 public:
  Shadow(SystemPtr system, std::vector<ClassConfig> configs);
  static Shadow uniform(SystemPtr system, const ClassConfig& c);

  const SystemPtr& system() const { return sys_; }
  const std::vector<ClassConfig>& configs() const { return configs_; }
  const ClassConfig& config(int cls) const { return configs_.at(static_cast<std::size_t>(cls)); }
  void set_config(int cls, ClassConfig c) { configs_.at(static_cast<std::size_t>(cls)) = std::move(c); }

  /// Exact k set on a real direction.
  IntervalSet ln_set(int dir) const;
  Membership membership(int dir, std::int64_t k) const;

 private:
  SystemPtr sys_;
  std::vector<ClassConfig> configs_;
};

/// Throws NotRealRoot.
Membership membership(const Shadow& shadow, const Root& alpha);

/// k -> ln/in on one line: evaluated on [lo, hi], constant outside.
struct LineOracle {
  std::function<Membership(std::int64_t)> at;
  std::int64_t lo = -10;
  std::int64_t hi = 10;
  Membership below = Membership::IN;
  Membership above = Membership::IN;

  IntervalSet ln_set() const;
  static LineOracle of(const IntervalSet& ln, std::int64_t lo, std::int64_t hi);
};

/// Inverse of membership. Throws NotAShadowPattern.
ClassConfig classify_line(const IntervalSet& plus_ln, const IntervalSet& minus_ln);
ClassConfig classify_line(const LineOracle& plus, const LineOracle& minus);

struct ClosureViolation {
  Root alpha, beta, sum;
  std::string relation;  // "a+b" or "a+2b"
  Membership expected = Membership::LN;
  Membership found = Membership::IN;
};

/// Pairs of ln roots with |k| <= K whose sum (or α + 2β) is real but in.
std::vector<ClosureViolation> check_closure_38(const Shadow& shadow, std::int64_t K);

enum class Uniformity { AllUp, AllDown, Mixed, NoneHybrid };
const char* to_string(Uniformity u);

/// Direction uniformity of the hybrid classes meeting S.
Uniformity uniform_hybrid_check(const Shadow& shadow, const RootSubset& S);

/// ln iff ζ > 0. Throws InvalidFunctional if ζ(δ) = 0 or ζ vanishes on a
/// real root.
Shadow shadow_from_functional(SystemPtr system, const LinearFunctional& zeta);

}  // namespace superroots
