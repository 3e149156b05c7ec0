#pragma once

#include "superroots/root.hpp"

#include <vector>

namespace superroots {

enum class RayKind { Point, Up, Down, Line };

/// anchor + s*axis for s in {0}, Z>=0, Z<=0 or Z.
struct Descriptor {
  Root anchor;
  int axis = -1;  // index into SupportSet::axes; -1 for points
  RayKind kind = RayKind::Point;
};

/// Finite union of points, rays and lines along declared axes.
struct SupportSet {
  BasisId basis;
  std::vector<Root> axes;
  std::vector<Descriptor> items;

  explicit SupportSet(BasisId b) : basis(b) {}
  int add_axis(const Root& u);
  void add_point(const Root& p);
  void add(const Root& anchor, int axis, RayKind kind);

  bool contains(const Root& p) const;
};

/// α ∈ 𝔅: for every λ in supp, only finitely many k > 0 have λ + kα in supp.
bool in_frak_B(const SupportSet& supp, const Root& alpha);

/// α ∈ ℭ: α + supp ⊆ supp. Throws DirectionNotDecidable when a shifted ray
/// must be compared with a parallel ray whose axis is not ±1 times its own.
bool in_frak_C(const SupportSet& supp, const Root& alpha);

}  // namespace superroots
