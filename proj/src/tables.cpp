#include "superroots/tables.hpp"

#include "superroots/errors.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>

namespace superroots {

namespace {

// Entries are built from 1-based printed indices; a symbol outside the basis
// yields nullopt and the entry is logged as out of basis.
struct Gen {
  BasisId b;
  bool project = false;
  PrintedTable t;

  std::optional<Root> e(int i) const {
    if (b.kind == BasisKind::EpsDelta && (i < 1 || i > b.m)) return std::nullopt;
    if (b.kind == BasisKind::G3 && (i < 1 || i > 3)) return std::nullopt;
    return Root::unit(b, i - 1);
  }
  std::optional<Root> d(int j) const {
    if (b.kind == BasisKind::F4) return (j >= 1 && j <= 3) ? std::optional<Root>(Root::unit(b, j)) : std::nullopt;
    if (j < 1 || j > b.n) return std::nullopt;
    return Root::unit(b, b.m + j - 1);
  }

  void put(std::vector<Root>& col, std::optional<Root> r, bool pm, const std::string& text) {
    if (!r) {
      if (std::find(t.out_of_basis.begin(), t.out_of_basis.end(), text) == t.out_of_basis.end())
        t.out_of_basis.push_back(text);
      return;
    }
    Root x = project ? traceless_projection(*r) : *r;
    x.sigma = r->sigma;
    col.push_back(x);
    if (pm) col.push_back(-x);
  }
};

std::optional<Root> add(std::optional<Root> a, std::optional<Root> b, int sb = 1) {
  if (!a || !b) return std::nullopt;
  return sb > 0 ? *a + *b : *a - *b;
}

std::optional<Root> scale(int c, std::optional<Root> a) {
  if (!a) return std::nullopt;
  return c * *a;
}

std::string idx(const char* s, int i) { return std::string(s) + std::to_string(i); }

}  // namespace

PrintedTable printed_table(const AffineTypeId& type) {
  type.validate();
  const FiniteTypeId& f = type.finite;
  Gen g{f.basis(), f.traceless(), {}};
  auto& T = g.t;
  T.imaginary.push_back(Root(g.b));
  const int m = g.b.m, n = g.b.n;

  switch (f.family) {
    case Family::A: {
      if (!f.traceless()) {
        // A(m-1,n-1), m != n: kind and parity rows.
        for (int i = 1; i <= m; ++i)
          for (int r = 1; r <= m; ++r) {
            if (i != r) g.put(T.real, add(g.e(i), g.e(r), -1), false, "e" + std::to_string(i) + "-e" + std::to_string(r));
            g.put(T.even, add(g.e(i), g.e(r), -1), false, "");
          }
        for (int j = 1; j <= n; ++j)
          for (int s = 1; s <= n; ++s) {
            if (j != s) g.put(T.real, add(g.d(j), g.d(s), -1), false, "");
            g.put(T.even, add(g.d(j), g.d(s), -1), false, "");
          }
        for (int i = 1; i <= m; ++i)
          for (int j = 1; j <= n; ++j) {
            g.put(T.nonsingular, add(g.e(i), g.d(j), -1), true, "");
            g.put(T.odd, add(g.e(i), g.d(j), -1), true, "");
          }
      } else {
        // A(n,n) with sigma: kind and parity rows; n symbols of each kind.
        for (int i = 1; i <= m; ++i)
          for (int j = 1; j <= m; ++j) {
            if (i != j) {
              g.put(T.real, add(g.e(i), g.e(j), -1), false, "");
              g.put(T.real, add(g.d(i), g.d(j), -1), false, "");
            }
            g.put(T.even, add(g.e(i), g.e(j), -1), false, "");
            g.put(T.even, add(g.d(i), g.d(j), -1), false, "");
          }
        for (int i = 1; i <= m; ++i)
          for (int j = 1; j <= n; ++j) {
            auto odd = add(g.e(i), g.d(j), -1);
            odd->sigma = 1;
            g.put(T.nonsingular, odd, true, "");
            g.put(T.odd, odd, true, "");
          }
      }
      break;
    }
    case Family::B: {
      for (int i = 1; i <= m; ++i) {
        g.put(T.real, g.e(i), true, "");
        g.put(T.even, g.e(i), true, "");
        for (int r = 1; r <= m; ++r) {
          if (i == r) continue;
          g.put(T.real, add(g.e(i), g.e(r)), true, "");
          g.put(T.real, add(g.e(i), g.e(r), -1), true, "");
          g.put(T.even, add(g.e(i), g.e(r)), true, "");
          g.put(T.even, add(g.e(i), g.e(r), -1), true, "");
        }
      }
      for (int j = 1; j <= n; ++j) {
        g.put(T.real, g.d(j), true, "");
        g.put(T.real, scale(2, g.d(j)), true, "");
        g.put(T.odd, g.d(j), true, "");
        for (int s = 1; s <= n; ++s) {
          if (j != s) {
            g.put(T.real, add(g.d(j), g.d(s)), true, "");
            g.put(T.real, add(g.d(j), g.d(s), -1), true, "");
          }
          // The parity rows put the i != r restriction on eps only.
          g.put(T.even, add(g.d(j), g.d(s)), true, "");
          g.put(T.even, add(g.d(j), g.d(s), -1), true, "");
        }
      }
      for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) {
          for (int sg : {1, -1}) {
            g.put(T.nonsingular, add(g.e(i), g.d(j), sg), true, "");
            g.put(T.odd, add(g.e(i), g.d(j), sg), true, "");
          }
        }
      break;
    }
    case Family::C: {
      const int nn = f.p;  // C(n): delta indices 1..n-1 exist
      g.put(T.real, scale(2, g.e(1)), true, "2e1");
      g.put(T.even, scale(2, g.e(1)), true, "2e1");
      for (int j = 1; j <= nn - 1; ++j) {
        g.put(T.real, scale(2, g.d(j)), true, "");
        for (int s = 1; s <= nn - 1; ++s) {
          if (j != s) {
            g.put(T.real, add(g.d(j), g.d(s)), true, "");
            g.put(T.real, add(g.d(j), g.d(s), -1), true, "");
          }
          g.put(T.even, add(g.d(j), g.d(s)), true, "");
          g.put(T.even, add(g.d(j), g.d(s), -1), true, "");
        }
      }
      for (int j = 1; j <= nn; ++j)
        for (int sg : {1, -1}) {
          const std::string text = std::string("e1") + (sg > 0 ? "+" : "-") + idx("d", j);
          g.put(T.nonsingular, add(g.e(1), g.d(j), sg), true, text);
          g.put(T.odd, add(g.e(1), g.d(j), sg), true, text);
        }
      break;
    }
    case Family::D: {
      for (int i = 1; i <= m; ++i)
        for (int r = 1; r <= m; ++r) {
          if (i == r) continue;
          for (int sg : {1, -1}) {
            g.put(T.real, add(g.e(i), g.e(r), sg), true, "");
            g.put(T.even, add(g.e(i), g.e(r), sg), true, "");
          }
        }
      for (int j = 1; j <= n; ++j) {
        g.put(T.real, scale(2, g.d(j)), true, "");
        for (int s = 1; s <= n; ++s) {
          for (int sg : {1, -1}) {
            if (j != s) g.put(T.real, add(g.d(j), g.d(s), sg), true, "");
            g.put(T.even, add(g.d(j), g.d(s), sg), true, "");
          }
        }
      }
      for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j)
          for (int sg : {1, -1}) {
            g.put(T.nonsingular, add(g.e(i), g.d(j), sg), true, "");
            g.put(T.odd, add(g.e(i), g.d(j), sg), true, "");
          }
      break;
    }
    case Family::F4: {
      const Root eps = Root::unit(g.b, 0);
      g.put(T.real, eps, true, "");
      g.put(T.even, Root(g.b), true, "");
      g.put(T.even, eps, true, "");
      for (int i = 1; i <= 3; ++i) {
        g.put(T.real, g.d(i), true, "");
        g.put(T.even, g.d(i), true, "");
        for (int j = 1; j <= 3; ++j) {
          if (i == j) continue;
          for (int sg : {1, -1}) {
            g.put(T.real, add(g.d(i), g.d(j), sg), true, "");
            g.put(T.even, add(g.d(i), g.d(j), sg), true, "");
          }
        }
      }
      const Rational h(1, 2);
      for (int s1 : {1, -1})
        for (int s2 : {1, -1})
          for (int s3 : {1, -1}) {
            Root r(g.b, {h, h * s1, h * s2, h * s3});
            g.put(T.nonsingular, r, true, "");
            g.put(T.odd, r, true, "");
          }
      break;
    }
    case Family::G3: {
      const Root nu = Root::unit(g.b, 3);
      // Kind rows as printed.
      g.put(T.real, nu, true, "");
      g.put(T.real, 2 * nu, true, "");
      // Parity rows as printed.
      g.put(T.even, Root(g.b), true, "");
      g.put(T.even, 2 * nu, true, "");
      g.put(T.odd, nu, true, "");
      for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
          if (i == j) continue;
          const Root eij = *g.e(i) - *g.e(j);
          g.put(T.real, eij, true, "");
          g.put(T.real, nu + eij, true, "");
          g.put(T.real, nu - eij, true, "");
          g.put(T.even, eij, true, "");
          g.put(T.even, nu + eij, true, "");
          g.put(T.even, nu - eij, true, "");
          const int t = 6 - i - j;
          const Root w = 2 * *g.e(i) - *g.e(j) - *g.e(t);
          g.put(T.nonsingular, w, true, "");
          g.put(T.odd, w, true, "");
        }
      break;
    }
    case Family::D21L: {
      g.put(T.even, Root(g.b), false, "");
      for (int i = 0; i < 3; ++i) {
        g.put(T.real, Root::unit(g.b, i, 2), true, "");
        g.put(T.even, Root::unit(g.b, i, 2), true, "");
      }
      for (int s1 : {1, -1})
        for (int s2 : {1, -1})
          for (int s3 : {1, -1}) {
            Root r(g.b, {Rational(s1), Rational(s2), Rational(s3)});
            g.put(T.nonsingular, r, false, "");
            g.put(T.odd, r, false, "");
          }
      break;
    }
    default:
      throw UnknownType(type.label() + " has no printed table");
  }
  return T;
}

GoldenReport compare_with_tables(const AffineRootSystem& system, std::int64_t K) {
  const PrintedTable T = printed_table(system.type());
  GoldenReport rep;
  rep.type = system.type().label();
  rep.out_of_basis = T.out_of_basis;

  const std::set<Root> im(T.imaginary.begin(), T.imaginary.end());
  const std::set<Root> re(T.real.begin(), T.real.end());
  const std::set<Root> ns(T.nonsingular.begin(), T.nonsingular.end());
  const std::set<Root> ev(T.even.begin(), T.even.end());
  const std::set<Root> od(T.odd.begin(), T.odd.end());

  std::set<Root> printed;
  for (const auto* s : {&im, &re, &ns, &ev, &od}) printed.insert(s->begin(), s->end());
  for (const auto& r : printed)
    if (!system.contains(r)) rep.table_entries_not_in_R.push_back(r.to_string());

  for (const Root& root : system.window(K)) {
    ++rep.roots_checked;
    const Root d = root.direction();
    std::string table_kind;
    int hits = 0;
    if (im.count(d)) { table_kind = "imaginary"; ++hits; }
    if (re.count(d)) { table_kind = "real"; ++hits; }
    if (ns.count(d)) { table_kind = "nonsingular"; ++hits; }
    if (hits == 0) table_kind = "absent";
    if (hits > 1) table_kind = "ambiguous";
    RootKind k = classify(system, root);
    if (k == RootKind::Zero) k = RootKind::Imaginary;  // 0 sits in the Zδ column
    if (table_kind != to_string(k)) {
      ++rep.kind_mismatches;
      rep.mismatches.push_back({root, "kind", table_kind, to_string(k)});
    }

    std::string table_par;
    const bool e = ev.count(d) != 0, o = od.count(d) != 0;
    table_par = e && o ? "ambiguous" : e ? "even" : o ? "odd" : "absent";
    const std::string computed = to_string(parity(system, root));
    if (table_par != computed) {
      ++rep.parity_mismatches;
      rep.mismatches.push_back({root, "parity", table_par, computed});
    }
  }
  return rep;
}

}  // namespace superroots
