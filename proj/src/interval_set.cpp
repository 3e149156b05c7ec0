#include "superroots/interval_set.hpp"

#include <algorithm>

namespace superroots {

namespace {

std::int64_t neg(std::int64_t x) {
  if (x == IntervalSet::kNegInf) return IntervalSet::kPosInf;
  if (x == IntervalSet::kPosInf) return IntervalSet::kNegInf;
  return -x;
}

std::int64_t add(std::int64_t x, std::int64_t c) {
  if (x == IntervalSet::kNegInf || x == IntervalSet::kPosInf) return x;
  return x + c;
}

}  // namespace

IntervalSet IntervalSet::range(std::int64_t lo, std::int64_t hi) {
  IntervalSet s;
  if (lo <= hi) s.iv_.emplace_back(lo, hi);
  return s;
}

void IntervalSet::normalize() {
  std::sort(iv_.begin(), iv_.end());
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (const auto& p : iv_) {
    if (p.first > p.second) continue;
    if (!out.empty() && (out.back().second == kPosInf || p.first <= out.back().second + 1)) {
      out.back().second = std::max(out.back().second, p.second);
    } else {
      out.push_back(p);
    }
  }
  iv_ = std::move(out);
}

bool IntervalSet::contains(std::int64_t k) const {
  for (const auto& p : iv_)
    if (p.first <= k && k <= p.second) return true;
  return false;
}

IntervalSet IntervalSet::unite(const IntervalSet& o) const {
  IntervalSet s = *this;
  s.iv_.insert(s.iv_.end(), o.iv_.begin(), o.iv_.end());
  s.normalize();
  return s;
}

IntervalSet IntervalSet::intersect(const IntervalSet& o) const {
  IntervalSet s;
  for (const auto& a : iv_)
    for (const auto& b : o.iv_) {
      const auto lo = std::max(a.first, b.first);
      const auto hi = std::min(a.second, b.second);
      if (lo <= hi) s.iv_.emplace_back(lo, hi);
    }
  s.normalize();
  return s;
}

IntervalSet IntervalSet::complement() const {
  IntervalSet s;
  std::int64_t next = kNegInf;
  bool open = true;  // whether `next` is still a valid start
  for (const auto& p : iv_) {
    if (p.first != kNegInf && open) s.iv_.emplace_back(next, p.first - 1);
    if (p.second == kPosInf) {
      open = false;
      break;
    }
    next = p.second + 1;
  }
  if (open) s.iv_.emplace_back(next, kPosInf);
  s.normalize();
  return s;
}

IntervalSet IntervalSet::negated() const {
  IntervalSet s;
  for (const auto& p : iv_) s.iv_.emplace_back(neg(p.second), neg(p.first));
  s.normalize();
  return s;
}

IntervalSet IntervalSet::shifted(std::int64_t c) const {
  IntervalSet s;
  for (const auto& p : iv_) s.iv_.emplace_back(add(p.first, c), add(p.second, c));
  s.normalize();
  return s;
}

std::vector<std::int64_t> IntervalSet::elements_in(std::int64_t lo, std::int64_t hi) const {
  std::vector<std::int64_t> out;
  for (const auto& p : iv_) {
    const auto a = std::max(p.first, lo);
    const auto b = std::min(p.second, hi);
    for (auto k = a; k <= b; ++k) out.push_back(k);
  }
  return out;
}

std::string IntervalSet::to_string() const {
  if (iv_.empty()) return "{}";
  if (is_all()) return "Z";
  std::string out;
  for (const auto& p : iv_) {
    if (!out.empty()) out += " u ";
    if (p.first == p.second) {
      out += "{" + std::to_string(p.first) + "}";
      continue;
    }
    out += p.first == kNegInf ? "(-inf," : "[" + std::to_string(p.first) + ",";
    out += p.second == kPosInf ? "+inf)" : std::to_string(p.second) + "]";
  }
  return out;
}

}  // namespace superroots
