#include "superroots/affine.hpp"

#include "superroots/errors.hpp"

#include <algorithm>

namespace superroots {

void AffineTypeId::validate() const {
  finite.validate();
  switch (finite.family) {
    case Family::A: case Family::B: case Family::C: case Family::D21L:
    case Family::F4: case Family::G3:
      break;
    case Family::D:
      if (finite.p < 2) throw RankError("affine D(m,n) needs m >= 2; use C(n) for m = 1");
      break;
    default:
      throw UnknownType(finite.label() + " has no untwisted affine system here");
  }
  if (finite.family == Family::B && finite.q < 1) throw RankError("affine B(m,n) needs n >= 1");
  if (finite.family == Family::D && finite.q < 1) throw RankError("affine D(m,n) needs n >= 1");
}

AffineTypeId parse_affine_type(std::string_view text) {
  AffineTypeId t{parse_finite_type(text)};
  t.validate();
  return t;
}

AffineRootSystem::AffineRootSystem(const AffineTypeId& type, std::optional<Rational> lambda)
    : type_(type) {
  type_.validate();
  finite_ = build_finite(type_.finite, lambda);
  const BasisId b = finite_.basis();

  std::set<Root> dirs;
  if (traceless()) {
    for (const auto& r : finite_.roots())
      if (finite_parity(type_.finite, r) == Parity::Even) dirs.insert(r);
    for (int i = 0; i < b.m; ++i)
      for (int j = 0; j < b.n; ++j) {
        Root odd = traceless_projection(Root::unit(b, i) - Root::unit(b, b.m + j));
        odd.sigma = 1;
        dirs.insert(odd);
        dirs.insert(-odd);
      }
  } else {
    dirs.insert(finite_.roots().begin(), finite_.roots().end());
  }
  dirs_.assign(dirs.begin(), dirs.end());
  const int D = direction_count();
  for (int i = 0; i < D; ++i) index_.emplace(dirs_[static_cast<std::size_t>(i)], i);
  zero_ = index_.at(Root(b));

  neg_.resize(static_cast<std::size_t>(D));
  sum_.assign(static_cast<std::size_t>(D * D), -1);
  sum2_.assign(static_cast<std::size_t>(D * D), -1);
  for (int i = 0; i < D; ++i) {
    neg_[static_cast<std::size_t>(i)] = index_.at(-direction(i));
    for (int j = 0; j < D; ++j) {
      auto it = index_.find(direction(i) + direction(j));
      if (it != index_.end()) sum_[static_cast<std::size_t>(i * D + j)] = it->second;
      it = index_.find(direction(i) + 2 * direction(j));
      if (it != index_.end()) sum2_[static_cast<std::size_t>(i * D + j)] = it->second;
    }
  }

  for (int i = 0; i < D; ++i) {
    kind_.push_back(i == zero_ ? RootKind::Imaginary : classify(*this, direction(i)));
    parity_.push_back(parity(*this, direction(i)));
  }

  class_of_.assign(static_cast<std::size_t>(D), {-1, 0});
  for (int i = 0; i < D; ++i) {
    if (!is_real_direction(i)) continue;
    const int j = negation(i);
    if (direction(i) < direction(j)) {
      class_of_[static_cast<std::size_t>(i)] = {static_cast<int>(classes_.size()), 1};
      class_of_[static_cast<std::size_t>(j)] = {static_cast<int>(classes_.size()), -1};
      classes_.emplace_back(i, j);
    }
  }
}

std::pair<int, int> AffineRootSystem::class_of(int dir) const {
  return class_of_.at(static_cast<std::size_t>(dir));
}

Root AffineRootSystem::canonicalize(const Root& r) const {
  if (r.basis != basis()) throw BasisMismatch(r.to_string() + " vs " + type_.label());
  return traceless() ? traceless_projection(r) : r;
}

int AffineRootSystem::direction_index(const Root& r) const {
  auto it = index_.find(canonicalize(r).direction());
  return it == index_.end() ? -1 : it->second;
}

bool AffineRootSystem::contains(const Root& r) const { return direction_index(r) >= 0; }

std::set<std::int64_t> AffineRootSystem::sigma_values(const Root& finite_vector) const {
  std::set<std::int64_t> out;
  Root probe = canonicalize(finite_vector).direction();
  for (std::int64_t s : {-1, 0, 1}) {
    probe.sigma = s;
    if (index_.count(probe)) out.insert(s);
  }
  return out;
}

std::vector<Root> AffineRootSystem::window(std::int64_t K) const {
  std::vector<Root> out;
  out.reserve(static_cast<std::size_t>((2 * K + 1) * direction_count()));
  for (std::int64_t k = -K; k <= K; ++k)
    for (const auto& d : dirs_) out.push_back(d.shifted(k));
  return out;
}

AffineRootSystem build_affine(const AffineTypeId& type, std::optional<Rational> lambda) {
  return AffineRootSystem(type, lambda);
}

SystemPtr make_system(const AffineTypeId& type, std::optional<Rational> lambda) {
  return std::make_shared<const AffineRootSystem>(type, lambda);
}

RootKind classify(const AffineRootSystem& system, const Root& root) {
  if (!system.contains(root)) throw NotARoot(root.to_string() + " not in " + system.type().label());
  const Root r = system.canonicalize(root);
  if (r.is_zero()) return RootKind::Zero;
  bool orthogonal = true;
  for (const auto& d : system.finite_part().roots()) {
    if (!form_eval(r, d, system.form()).is_zero()) {
      orthogonal = false;
      break;
    }
  }
  if (orthogonal) return RootKind::Imaginary;
  return form_eval(r, r, system.form()).is_zero() ? RootKind::Nonsingular : RootKind::Real;
}

Parity parity(const AffineRootSystem& system, const Root& root) {
  if (!system.contains(root)) throw NotARoot(root.to_string() + " not in " + system.type().label());
  const Root r = system.canonicalize(root);
  if (system.traceless()) return r.sigma == 0 ? Parity::Even : Parity::Odd;
  return finite_parity(system.type().finite, r);
}

Root reflect(const AffineRootSystem& system, const Root& alpha, const Root& beta) {
  const RootKind ka = classify(system, alpha);
  const RootKind kb = classify(system, beta);
  if (ka != RootKind::Real) {
    if (ka == RootKind::Nonsingular) throw IsotropicReflectionError(alpha.to_string() + " is isotropic");
    throw NotRealRoot(alpha.to_string() + " is not real");
  }
  const Root a = system.canonicalize(alpha);
  const Root b = system.canonicalize(beta);
  const std::int64_t c = cartan_integer(b, a, system.form());
  Root out = b - c * a;
  if ((kb == RootKind::Real || kb == RootKind::Imaginary || kb == RootKind::Zero) && !system.contains(out))
    throw AxiomViolation("r_" + a.to_string() + "(" + b.to_string() + ") = " + out.to_string() + " not in R");
  return out;
}

}  // namespace superroots
