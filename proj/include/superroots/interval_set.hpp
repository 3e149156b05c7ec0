#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace superroots {

/// Finite union of integer intervals, possibly unbounded. Kept sorted with
/// no two intervals overlapping or adjacent.
class IntervalSet {
 public:
  static constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min();
  static constexpr std::int64_t kPosInf = std::numeric_limits<std::int64_t>::max();

  IntervalSet() = default;
  static IntervalSet all() { return range(kNegInf, kPosInf); }
  static IntervalSet range(std::int64_t lo, std::int64_t hi);
  static IntervalSet at_least(std::int64_t lo) { return range(lo, kPosInf); }
  static IntervalSet at_most(std::int64_t hi) { return range(kNegInf, hi); }
  static IntervalSet point(std::int64_t k) { return range(k, k); }

  bool empty() const { return iv_.empty(); }
  bool contains(std::int64_t k) const;
  bool is_all() const { return iv_.size() == 1 && iv_[0].first == kNegInf && iv_[0].second == kPosInf; }
  bool bounded_below() const { return empty() || iv_.front().first != kNegInf; }
  bool bounded_above() const { return empty() || iv_.back().second != kPosInf; }

  IntervalSet unite(const IntervalSet& o) const;
  IntervalSet intersect(const IntervalSet& o) const;
  IntervalSet complement() const;
  /// {-k : k in this}
  IntervalSet negated() const;
  IntervalSet shifted(std::int64_t c) const;
  bool subset_of(const IntervalSet& o) const { return intersect(o) == *this; }

  void insert(std::int64_t k) { *this = unite(point(k)); }

  /// Elements in [lo, hi], ascending.
  std::vector<std::int64_t> elements_in(std::int64_t lo, std::int64_t hi) const;
  const std::vector<std::pair<std::int64_t, std::int64_t>>& intervals() const { return iv_; }

  friend bool operator==(const IntervalSet& a, const IntervalSet& b) { return a.iv_ == b.iv_; }

  /// e.g. "{}", "Z", "[3,+inf)", "[-2,0] u {4}".
  std::string to_string() const;

 private:
  void normalize();
  std::vector<std::pair<std::int64_t, std::int64_t>> iv_;
};

}  // namespace superroots
