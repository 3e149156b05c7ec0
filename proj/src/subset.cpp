#include "superroots/subset.hpp"

#include "superroots/errors.hpp"

namespace superroots {

RootSubset::RootSubset(SystemPtr system)
    : sys_(std::move(system)), lines_(static_cast<std::size_t>(sys_->direction_count())) {}

RootSubset RootSubset::whole(SystemPtr system) {
  RootSubset s(std::move(system));
  for (auto& l : s.lines_) l = IntervalSet::all();
  return s;
}

RootSubset RootSubset::from_roots(SystemPtr system, const std::vector<Root>& roots) {
  RootSubset s(std::move(system));
  for (const auto& r : roots) s.insert(r);
  return s;
}

void RootSubset::add_line(int dir, const IntervalSet& s) {
  auto& l = lines_[static_cast<std::size_t>(dir)];
  l = l.unite(s);
}

void RootSubset::insert(const Root& r) {
  const int d = sys_->direction_index(r);
  if (d < 0) throw NotARoot(r.to_string());
  add_line(d, IntervalSet::point(r.k));
}

bool RootSubset::contains(const Root& r) const {
  const int d = sys_->direction_index(r);
  return d >= 0 && contains(d, r.k);
}

bool RootSubset::empty() const {
  for (const auto& l : lines_)
    if (!l.empty()) return false;
  return true;
}

RootSubset RootSubset::negated() const {
  RootSubset s(sys_);
  for (int d = 0; d < sys_->direction_count(); ++d) s.set_line(sys_->negation(d), line(d).negated());
  return s;
}

RootSubset RootSubset::unite(const RootSubset& o) const {
  RootSubset s(sys_);
  for (std::size_t d = 0; d < lines_.size(); ++d) s.lines_[d] = lines_[d].unite(o.lines_[d]);
  return s;
}

RootSubset RootSubset::intersect(const RootSubset& o) const {
  RootSubset s(sys_);
  for (std::size_t d = 0; d < lines_.size(); ++d) s.lines_[d] = lines_[d].intersect(o.lines_[d]);
  return s;
}

bool RootSubset::subset_of(const RootSubset& o) const {
  for (std::size_t d = 0; d < lines_.size(); ++d)
    if (!lines_[d].subset_of(o.lines_[d])) return false;
  return true;
}

std::vector<int> RootSubset::directions() const {
  std::vector<int> out;
  for (int d = 0; d < sys_->direction_count(); ++d)
    if (!line(d).empty()) out.push_back(d);
  return out;
}

std::vector<std::pair<int, std::int64_t>> RootSubset::window_pairs(std::int64_t K) const {
  std::vector<std::pair<int, std::int64_t>> out;
  for (int d = 0; d < sys_->direction_count(); ++d)
    for (auto k : line(d).elements_in(-K, K)) out.emplace_back(d, k);
  return out;
}

std::vector<Root> RootSubset::window(std::int64_t K) const {
  std::vector<Root> out;
  for (const auto& [d, k] : window_pairs(K)) out.push_back(sys_->make_root(d, k));
  return out;
}

std::string RootSubset::to_string() const {
  std::string out;
  for (int d : directions()) {
    const Root& r = sys_->direction(d);
    out += (r.is_zero() ? std::string("0") : r.to_string()) + ": " + line(d).to_string() + "\n";
  }
  return out;
}

ClosureResult closure(const RootSubset& seed, std::int64_t K) {
  const auto& sys = seed.sys();
  ClosureResult res{seed, false};
  bool changed = true;
  while (changed) {
    changed = false;
    const auto elems = res.set.window_pairs(K);
    for (const auto& [a, ka] : elems) {
      for (const auto& [b, kb] : elems) {
        const int s = sys.sum_index(a, b);
        if (s < 0) continue;
        const std::int64_t k = ka + kb;
        if (res.set.contains(s, k)) continue;
        if (k < -K || k > K) {
          res.boundary_touched = true;
          continue;
        }
        res.set.add_line(s, IntervalSet::point(k));
        changed = true;
      }
    }
  }
  return res;
}

namespace {

std::string pair_witness(const AffineRootSystem& sys, int a, std::int64_t ka, int b, std::int64_t kb,
                         const char* what) {
  return sys.make_root(a, ka).to_string() + " + " + sys.make_root(b, kb).to_string() + " " + what;
}

// (P + P) ∩ U ⊆ P over summands in the window.
CheckResult closed_in(const RootSubset& P, const RootSubset& U, std::int64_t K) {
  const auto& sys = P.sys();
  const auto elems = P.window_pairs(K);
  for (const auto& [a, ka] : elems)
    for (const auto& [b, kb] : elems) {
      const int s = sys.sum_index(a, b);
      if (s < 0) continue;
      const std::int64_t k = ka + kb;
      if (U.contains(s, k) && !P.contains(s, k))
        return {false, pair_witness(sys, a, ka, b, kb, "leaves the set")};
    }
  return {};
}

}  // namespace

CheckResult is_symmetric_closed(const RootSubset& S, std::int64_t K) {
  const auto& sys = S.sys();
  for (int d = 0; d < sys.direction_count(); ++d) {
    if (!(S.line(sys.negation(d)) == S.line(d).negated())) {
      const Root& r = sys.direction(d);
      return {false, "not symmetric along " + r.to_string() + ": " + S.line(d).to_string() +
                         " vs negation " + S.line(sys.negation(d)).to_string()};
    }
  }
  return closed_in(S, RootSubset::whole(S.system()), K);
}

CheckResult is_parabolic(const RootSubset& P, const RootSubset& U, std::int64_t K) {
  if (!P.subset_of(U)) return {false, "P is not contained in U"};
  const RootSubset both = P.unite(P.negated());
  if (!(both == U)) {
    for (int d = 0; d < U.sys().direction_count(); ++d)
      if (!(both.line(d) == U.line(d)))
        return {false, "P ∪ -P differs from U along " + U.sys().direction(d).to_string() + ": " +
                           both.line(d).to_string() + " vs " + U.line(d).to_string()};
  }
  return closed_in(P, U, K);
}

CheckResult is_parabolic(const RootSubset& P, std::int64_t K) {
  return is_parabolic(P, RootSubset::whole(P.system()), K);
}

}  // namespace superroots
