#pragma once

#include "superroots/affine.hpp"
#include "superroots/interval_set.hpp"

#include <string>
#include <vector>

namespace superroots {

/// Subset of an affine root system: for every finite direction, the set of
/// δ multiples present. Exact for all k.
class RootSubset {
 public:
  explicit RootSubset(SystemPtr system);
  static RootSubset whole(SystemPtr system);
  static RootSubset from_roots(SystemPtr system, const std::vector<Root>& roots);

  const SystemPtr& system() const { return sys_; }
  const AffineRootSystem& sys() const { return *sys_; }

  const IntervalSet& line(int dir) const { return lines_[static_cast<std::size_t>(dir)]; }
  void set_line(int dir, IntervalSet s) { lines_[static_cast<std::size_t>(dir)] = std::move(s); }
  void add_line(int dir, const IntervalSet& s);
  /// Throws NotARoot.
  void insert(const Root& r);

  bool contains(int dir, std::int64_t k) const { return line(dir).contains(k); }
  bool contains(const Root& r) const;
  bool empty() const;

  RootSubset negated() const;
  RootSubset unite(const RootSubset& o) const;
  RootSubset intersect(const RootSubset& o) const;
  bool subset_of(const RootSubset& o) const;
  friend bool operator==(const RootSubset& a, const RootSubset& b) { return a.lines_ == b.lines_; }

  /// Directions with a nonempty line.
  std::vector<int> directions() const;
  /// Elements with |k| <= K as (direction, k), ordered by direction then k.
  std::vector<std::pair<int, std::int64_t>> window_pairs(std::int64_t K) const;
  std::vector<Root> window(std::int64_t K) const;

  /// One line per nonempty direction: "e1-d1: [0,+inf)".
  std::string to_string() const;

 private:
  SystemPtr sys_;
  std::vector<IntervalSet> lines_;
};

struct CheckResult {
  bool ok = true;
  std::string witness;
  explicit operator bool() const { return ok; }
};

struct ClosureResult {
  RootSubset set;
  /// A sum in R fell outside |k| <= K, so the result may be too small.
  bool boundary_touched = false;
};

/// Least superset of seed closed under (a + b) ∩ R among roots with |k| <= K.
ClosureResult closure(const RootSubset& seed, std::int64_t K);

/// Symmetry is checked exactly; closedness over summands with |k| <= K.
CheckResult is_symmetric_closed(const RootSubset& S, std::int64_t K);

/// P closed relative to U on the window and P ∪ -P = U exactly.
CheckResult is_parabolic(const RootSubset& P, const RootSubset& U, std::int64_t K);
/// Relative to the whole root system.
CheckResult is_parabolic(const RootSubset& P, std::int64_t K);

}  // namespace superroots
