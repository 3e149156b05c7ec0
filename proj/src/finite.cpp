#include "superroots/finite.hpp"

#include "superroots/errors.hpp"

#include <set>
#include <sstream>

namespace superroots {

std::string FiniteTypeId::label() const {
  auto two = [&](const char* f) {
    return std::string(f) + "(" + std::to_string(p) + "," + std::to_string(q) + ")";
  };
  switch (family) {
    case Family::A: return two("A");
    case Family::B: return two("B");
    case Family::C: return "C(" + std::to_string(p) + ")";
    case Family::CMN: return two("C");
    case Family::D: return two("D");
    case Family::BC: return two("BC");
    case Family::D21L: return "D(2,1;λ)";
    case Family::F4: return "F(4)";
    case Family::G3: return "G(3)";
    case Family::SDeg: return "s(" + std::to_string(p - 1) + "," + std::to_string(p - 1) + ")";
    case Family::Pure: return pure_label.empty() ? "subset" : pure_label;
  }
  return "?";
}

std::vector<int> FiniteTypeId::ranks() const {
  switch (family) {
    case Family::A: case Family::B: case Family::CMN: case Family::D: case Family::BC:
      return {p, q};
    case Family::C: case Family::SDeg: return {p};
    default: return {};
  }
}

BasisId FiniteTypeId::basis() const {
  switch (family) {
    case Family::A: return BasisId::eps_delta(p + 1, q + 1);
    case Family::B: case Family::CMN: case Family::D: case Family::BC:
      return BasisId::eps_delta(p, q);
    case Family::C: return BasisId::eps_delta(1, p - 1);
    case Family::SDeg: return BasisId::eps_delta(p, p);
    case Family::D21L: return BasisId::gamma();
    case Family::F4: return BasisId::f4();
    case Family::G3: return BasisId::g3();
    case Family::Pure: break;
  }
  throw UnknownType("pure sets carry their own basis");
}

void FiniteTypeId::validate() const {
  auto need = [&](bool ok, const char* what) {
    if (!ok) throw RankError(label() + ": " + what);
  };
  switch (family) {
    case Family::A: need(p >= 0 && q >= 0, "ranks must be >= 0"); break;
    case Family::B: case Family::CMN: case Family::D: case Family::BC:
      need(p >= 0 && q >= 0 && p + q >= 1, "ranks must be >= 0 with m+n >= 1");
      break;
    case Family::C: need(p >= 2, "C(n) needs n >= 2"); break;
    case Family::SDeg: need(p >= 2, "s(m-1,m-1) needs m >= 2"); break;
    default: break;
  }
}

FiniteTypeId parse_finite_type(std::string_view text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ',') { parts.push_back(cur); cur.clear(); }
    else if (c != ' ') cur += c;
  }
  parts.push_back(cur);
  auto num = [&](std::size_t i) {
    try {
      return std::stoi(parts.at(i));
    } catch (const std::exception&) {
      throw UnknownType("bad rank in '" + std::string(text) + "'");
    }
  };
  FiniteTypeId t;
  const std::string& f = parts[0];
  auto want = [&](std::size_t n) {
    if (parts.size() != n + 1) throw UnknownType("'" + std::string(text) + "' needs " + std::to_string(n) + " ranks");
  };
  if (f == "A" || f == "B" || f == "D" || f == "BC") {
    want(2);
    t.family = f == "A" ? Family::A : f == "B" ? Family::B : f == "D" ? Family::D : Family::BC;
    t.p = num(1);
    t.q = num(2);
  } else if (f == "C") {
    if (parts.size() == 2) {
      t.family = Family::C;
      t.p = num(1);
    } else {
      want(2);
      t.family = Family::CMN;
      t.p = num(1);
      t.q = num(2);
    }
  } else if (f == "s") {
    want(1);
    t.family = Family::SDeg;
    t.p = num(1);
  } else if (f == "D21L") {
    want(0);
    t.family = Family::D21L;
  } else if (f == "F4") {
    want(0);
    t.family = Family::F4;
  } else if (f == "G3") {
    want(0);
    t.family = Family::G3;
  } else {
    throw UnknownType("unknown type '" + std::string(text) + "'");
  }
  t.validate();
  return t;
}

const char* to_string(RootKind k) {
  switch (k) {
    case RootKind::Zero: return "zero";
    case RootKind::Real: return "real";
    case RootKind::Nonsingular: return "nonsingular";
    case RootKind::Imaginary: return "imaginary";
  }
  return "?";
}

const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

FiniteRootSet::FiniteRootSet(FiniteTypeId type, FormTable form, std::vector<Root> roots)
    : type_(std::move(type)), form_(std::move(form)) {
  std::set<Root> uniq(roots.begin(), roots.end());
  for (const auto& r : uniq)
    if (r.basis != form_.basis) throw BasisMismatch(r.to_string() + " not in " + type_.label());
  roots_.assign(uniq.begin(), uniq.end());
  for (std::size_t i = 0; i < roots_.size(); ++i) index_.emplace(roots_[i], i);
}

std::optional<std::size_t> FiniteRootSet::index_of(const Root& r) const {
  auto it = index_.find(r);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

RootKind FiniteRootSet::kind(const Root& r) const {
  if (r.is_zero()) return RootKind::Zero;
  bool orthogonal = true;
  for (const auto& s : roots_) {
    if (!form_eval(r, s, form_).is_zero()) {
      orthogonal = false;
      break;
    }
  }
  if (orthogonal) return RootKind::Imaginary;
  return form_eval(r, r, form_).is_zero() ? RootKind::Nonsingular : RootKind::Real;
}

std::vector<Root> FiniteRootSet::of_kind(RootKind k) const {
  std::vector<Root> out;
  for (const auto& r : roots_)
    if (kind(r) == k) out.push_back(r);
  return out;
}

Root traceless_projection(const Root& r) {
  Root out = r;
  const int m = r.basis.m;
  const int n = r.basis.n;
  Rational se = 0;
  Rational sd = 0;
  for (int i = 0; i < m; ++i) se += r.coords[static_cast<std::size_t>(i)];
  for (int j = 0; j < n; ++j) sd += r.coords[static_cast<std::size_t>(m + j)];
  for (int i = 0; i < m; ++i) out.coords[static_cast<std::size_t>(i)] -= se / Rational(m);
  for (int j = 0; j < n; ++j) out.coords[static_cast<std::size_t>(m + j)] -= sd / Rational(n);
  return out;
}

namespace {

struct Builder {
  BasisId b;
  std::vector<Root> out;

  Root e(int i) const { return Root::unit(b, i); }
  Root d(int j) const { return Root::unit(b, b.m + j); }
  void add(const Root& r) { out.push_back(r); }
  void pm(const Root& r) { out.push_back(r); out.push_back(-r); }
};

// eps_i - eps_r, delta_j - delta_s, +-(eps_i - delta_j)
void type_a(Builder& x, bool project) {
  const int m = x.b.m, n = x.b.n;
  for (int i = 0; i < m; ++i)
    for (int r = 0; r < m; ++r) x.add(x.e(i) - x.e(r));
  for (int j = 0; j < n; ++j)
    for (int s = 0; s < n; ++s) x.add(x.d(j) - x.d(s));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      const Root odd = project ? traceless_projection(x.e(i) - x.d(j)) : x.e(i) - x.d(j);
      x.pm(odd);
    }
}

// Shared part of B, C, D, BC: eps_i +- eps_r with the given diagonal rule,
// delta_j +- delta_s (j = s allowed) and eps_i +- delta_j.
void type_bcd(Builder& x, bool eps_diag, bool short_eps, bool short_delta) {
  const int m = x.b.m, n = x.b.n;
  x.add(Root(x.b));
  for (int i = 0; i < m; ++i)
    for (int r = 0; r < m; ++r) {
      if (i == r && !eps_diag) continue;
      x.pm(x.e(i) + x.e(r));
      x.pm(x.e(i) - x.e(r));
    }
  for (int j = 0; j < n; ++j)
    for (int s = 0; s < n; ++s) {
      x.pm(x.d(j) + x.d(s));
      x.pm(x.d(j) - x.d(s));
    }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      x.pm(x.e(i) + x.d(j));
      x.pm(x.e(i) - x.d(j));
    }
  if (short_eps)
    for (int i = 0; i < m; ++i) x.pm(x.e(i));
  if (short_delta)
    for (int j = 0; j < n; ++j) x.pm(x.d(j));
}

}  // namespace

FiniteRootSet build_finite(const FiniteTypeId& type, std::optional<Rational> lambda) {
  type.validate();
  const BasisId b = type.basis();
  Builder x{b, {}};
  x.add(Root(b));
  switch (type.family) {
    case Family::A: type_a(x, type.p == type.q); break;
    case Family::SDeg: type_a(x, false); break;
    case Family::B: type_bcd(x, false, true, true); break;
    case Family::BC: type_bcd(x, true, true, true); break;
    case Family::CMN: type_bcd(x, true, false, false); break;
    case Family::C: case Family::D: type_bcd(x, false, false, false); break;
    case Family::D21L: {
      for (int i = 0; i < 3; ++i) x.pm(Root::unit(b, i, 2));
      for (int s1 : {1, -1})
        for (int s2 : {1, -1})
          for (int s3 : {1, -1})
            x.add(Root(b, {Rational(s1), Rational(s2), Rational(s3)}));
      break;
    }
    case Family::F4: {
      x.pm(Root::unit(b, 0));
      for (int i = 1; i < 4; ++i) {
        x.pm(Root::unit(b, i));
        for (int j = 1; j < 4; ++j) {
          if (i == j) continue;
          x.pm(Root::unit(b, i) + Root::unit(b, j));
          x.pm(Root::unit(b, i) - Root::unit(b, j));
        }
      }
      const Rational h(1, 2);
      for (int s1 : {1, -1})
        for (int s2 : {1, -1})
          for (int s3 : {1, -1})
            x.pm(Root(b, {h, h * s1, h * s2, h * s3}));
      break;
    }
    case Family::G3: {
      const Root nu = Root::unit(b, 3);
      x.pm(nu);
      x.pm(2 * nu);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          if (i == j) continue;
          const Root eij = Root::unit(b, i) - Root::unit(b, j);
          x.add(eij);
          x.add(nu + eij);
          x.add(-nu + eij);
          const int t = 3 - i - j;
          x.pm(2 * Root::unit(b, i) - Root::unit(b, j) - Root::unit(b, t));
        }
      break;
    }
    case Family::Pure: throw UnknownType("build_finite needs a named family");
  }
  return FiniteRootSet(type, FormTable::standard(b, lambda), std::move(x.out));
}

Parity finite_parity(const FiniteTypeId& type, const Root& r) {
  const BasisId b = r.basis;
  Rational f = 0;
  switch (b.kind) {
    case BasisKind::EpsDelta: {
      if (type.traceless()) {
        bool eps = false, del = false;
        for (int i = 0; i < b.m; ++i) eps = eps || r.coords[static_cast<std::size_t>(i)] != 0;
        for (int j = 0; j < b.n; ++j) del = del || r.coords[static_cast<std::size_t>(b.m + j)] != 0;
        return eps && del ? Parity::Odd : Parity::Even;
      }
      for (int j = 0; j < b.n; ++j) f += r.coords[static_cast<std::size_t>(b.m + j)];
      break;
    }
    case BasisKind::Gamma: f = r.coords[0]; break;
    case BasisKind::F4: f = r.coords[0] * Rational(2); break;
    case BasisKind::G3: f = r.coords[3]; break;
  }
  if (!is_integer(f)) throw AxiomViolation("parity functional not integral on " + r.to_string());
  return f.numerator() % 2 == 0 ? Parity::Even : Parity::Odd;
}

std::string even_part_label(const FiniteTypeId& type) {
  switch (type.family) {
    case Family::A: return type.p == type.q ? "A_n ⊕ A_n" : "A_m ⊕ A_n ⊕ ℂ";
    case Family::B: return "B_m ⊕ C_n";
    case Family::C: return "C_{n-1} ⊕ ℂ";
    case Family::D: return "D_m ⊕ C_n";
    case Family::D21L: return "A₁ ⊕ A₁ ⊕ A₁";
    case Family::F4: return "A₁ ⊕ B₃";
    case Family::G3: return "A₁ ⊕ G₂";
    default: throw UnknownType(type.label() + " is not a basic classical type");
  }
}

}  // namespace superroots
