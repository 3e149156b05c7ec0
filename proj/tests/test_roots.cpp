#include "superroots/affine.hpp"
#include "superroots/axioms.hpp"
#include "superroots/errors.hpp"
#include "superroots/linalg.hpp"

#include "printers.hpp"

#include <algorithm>
#include <set>

using namespace superroots;

namespace {

FiniteRootSet F(const char* t) { return build_finite(parse_finite_type(t)); }
Root R(BasisId b, const char* s) { return parse_root(b, s); }

// Counts read off the defining lists, term by term.
std::size_t expected_size(Family f, int m, int n) {
  switch (f) {
    case Family::A: return (m + 1) * m + (n + 1) * n + 2 * (m + 1) * (n + 1) + 1;
    case Family::B: return 2 * m * (m - 1) + 2 * m + 2 * n * (n - 1) + 2 * n + 2 * n + 4 * m * n + 1;
    case Family::D: return 2 * m * (m - 1) + 2 * n * (n - 1) + 2 * n + 4 * m * n + 1;
    case Family::CMN: return 2 * m * (m - 1) + 2 * m + 2 * n * (n - 1) + 2 * n + 4 * m * n + 1;
    case Family::BC: return 2 * m * (m - 1) + 4 * m + 2 * n * (n - 1) + 4 * n + 4 * m * n + 1;
    default: return 0;
  }
}

// Number of roots of the even part listed in the classification table.
std::size_t even_count(const FiniteRootSet& s) {
  std::size_t c = 0;
  for (const auto& r : s.roots())
    if (!r.is_zero() && finite_parity(s.type(), r) == Parity::Even) ++c;
  return c;
}

FiniteRootSet pure(BasisId b, std::vector<Root> nz) {
  nz.push_back(Root(b));
  std::vector<Root> all = nz;
  for (const auto& r : nz) all.push_back(-r);
  FiniteTypeId t;
  t.pure_label = "test";
  return FiniteRootSet(t, FormTable::standard(b), all);
}

// All bases by exhaustive search over rank-sized subsets.
std::vector<std::vector<Root>> all_bases(const FiniteRootSet& s, std::size_t rank) {
  std::vector<Root> nz;
  for (const auto& r : s.roots())
    if (!r.is_zero()) nz.push_back(r);
  std::vector<std::vector<Root>> out;
  std::vector<bool> pick(nz.size(), false);
  std::fill(pick.end() - static_cast<long>(rank), pick.end(), true);
  do {
    std::vector<Root> cand;
    for (std::size_t i = 0; i < nz.size(); ++i)
      if (pick[i]) cand.push_back(nz[i]);
    bool ok = true;
    for (const auto& r : nz) {
      auto c = coordinates_in(cand, r);
      if (!c) { ok = false; break; }
      bool pos = true, neg = true;
      for (const auto& x : *c) {
        if (!is_integer(x)) ok = false;
        if (x < Rational(0)) pos = false;
        if (x > Rational(0)) neg = false;
      }
      if (!ok || !(pos || neg)) { ok = false; break; }
    }
    if (ok) out.push_back(cand);
  } while (std::next_permutation(pick.begin(), pick.end()));
  return out;
}

bool lex_positive(const Root& r) {
  for (const auto& c : r.coords)
    if (c != Rational(0)) return c > Rational(0);
  return false;
}

void check_base_against_oracle(const FiniteRootSet& comp, std::size_t rank) {
  const auto bases = all_bases(comp, rank);
  REQUIRE_FALSE(bases.empty());
  // Oracle: the unique base whose positive roots are the lex-positive ones.
  std::vector<Root> want;
  for (const auto& b : bases)
    if (std::all_of(b.begin(), b.end(), lex_positive)) want = b;
  REQUIRE(want.size() == rank);
  auto got = find_base(comp);
  std::set<Root> gs(got.begin(), got.end()), ws(want.begin(), want.end());
  CHECK(gs == ws);

  // Highest root: largest coefficient sum among positive roots.
  Root best;
  std::int64_t best_sum = -1;
  for (const auto& r : comp.roots()) {
    auto c = base_coefficients(got, r);
    REQUIRE(c);
    std::int64_t s = 0;
    for (auto x : *c) s += x;
    if (s > best_sum) { best_sum = s; best = r; }
  }
  const auto hr = highest_root(comp, got);
  CHECK(hr.theta == best);
  for (auto x : hr.coeffs) CHECK(x > 0);
}

}  // namespace

TEST_CASE("finite set sizes match the defining lists") {
  for (auto [f, key] : {std::pair{Family::B, "B"}, {Family::D, "D"}, {Family::CMN, "C"}, {Family::BC, "BC"}}) {
    for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
      const auto s = F((std::string(key) + "," + std::to_string(m) + "," + std::to_string(n)).c_str());
      CHECK_MESSAGE(s.size() == expected_size(f, m, n), key << "(" << m << "," << n << ")");
    }
  }
  // Projected A(1,1): e1-d1 and d2-e2 coincide, so odd vectors pair up.
  CHECK(F("A,1,1").size() == 2 + 2 + 4 + 1);
  for (auto [m, n] : {std::pair{2, 1}, {1, 0}, {3, 1}, {2, 2}})
    CHECK(F(("A," + std::to_string(m) + "," + std::to_string(n)).c_str()).size() == expected_size(Family::A, m, n));
  CHECK(F("D21L").size() == 15);
  CHECK(F("B,1,1").size() == 11);
  CHECK(F("B,0,1").size() == 5);
  CHECK(F("F4").size() == 37);
  CHECK(F("G3").size() == 29);
  CHECK(F("C,2").size() == 7);

  const auto d = F("D21L");
  const BasisId g = BasisId::gamma();
  for (const char* s : {"2g1", "-2g3", "g1+g2+g3", "g1-g2-g3", "-g1+g2-g3"}) CHECK(d.contains(R(g, s)));
  CHECK_FALSE(d.contains(R(g, "g1")));
  const auto b01 = F("B,0,1");
  CHECK(b01.contains(R(b01.basis(), "2d1")));
  CHECK_THROWS_AS(F("C,1"), RankError);
  CHECK_THROWS_AS(F("X,1"), UnknownType);
}

TEST_CASE("parity splits off the even part of the classification table") {
  // B_m+C_n, A_p+A_q, D_m+C_n, C_{n-1}, A1+A1+A1, A1+B3, A1+G2
  CHECK(even_count(F("B,1,1")) == 2 + 2);
  CHECK(even_count(F("B,2,2")) == 8 + 8);
  CHECK(even_count(F("A,2,1")) == 6 + 2);
  CHECK(even_count(F("A,1,1")) == 2 + 2);
  CHECK(even_count(F("D,2,1")) == 4 + 2);
  CHECK(even_count(F("C,3")) == 8);
  CHECK(even_count(F("D21L")) == 6);
  CHECK(even_count(F("F4")) == 2 + 18);
  CHECK(even_count(F("G3")) == 2 + 12);
}

TEST_CASE("even_part_label") {
  CHECK(even_part_label(parse_finite_type("B,2,1")) == "B_m ⊕ C_n");
  CHECK(even_part_label(parse_finite_type("G3")) == "A₁ ⊕ G₂");
  CHECK(even_part_label(parse_finite_type("D21L")) == "A₁ ⊕ A₁ ⊕ A₁");
  CHECK(even_part_label(parse_finite_type("F4")) == "A₁ ⊕ B₃");
  CHECK(even_part_label(parse_finite_type("A,2,1")) == "A_m ⊕ A_n ⊕ ℂ");
  CHECK_THROWS_AS(even_part_label(parse_finite_type("BC,1,1")), UnknownType);
}

TEST_CASE("axiom suite") {
  CHECK(check_supersystem_axioms(F("B,1,1")).all_passed());
  const auto s = check_supersystem_axioms(F("s,2"));
  CHECK(s.failed_ids() == std::vector<std::string>{"f"});

  const auto b = F("B,1,1");
  std::vector<Root> cut;
  for (const auto& r : b.roots())
    if (!(r == R(b.basis(), "e1"))) cut.push_back(r);
  const auto rep = check_supersystem_axioms(FiniteRootSet(b.type(), b.form(), cut));
  CHECK_FALSE(rep.get("b").passed);
}

TEST_CASE("root strings") {
  const auto b = F("B,1,1");
  const BasisId e = b.basis();
  auto s = root_string(b, R(e, "e1"), R(e, "d1"));
  CHECK(s.p == 1);
  CHECK(s.q == 1);
  CHECK(s.string == std::vector<Root>{R(e, "-e1+d1"), R(e, "d1"), R(e, "e1+d1")});
  s = root_string(b, R(e, "e1"), R(e, "e1"));
  CHECK(s.p == 2);
  CHECK(s.q == 0);
  CHECK(s.string == std::vector<Root>{R(e, "-e1"), Root(e), R(e, "e1")});
  // 2d1 + d1 is not a root; 2d1 - d1 is.
  s = root_string(b, R(e, "d1"), R(e, "2d1"));
  CHECK(s.p - s.q == cartan_integer(R(e, "2d1"), R(e, "d1"), b.form()));
  const auto a = F("A,2,1");
  s = root_string(a, R(a.basis(), "e1-e2"), R(a.basis(), "d1-d2"));
  CHECK(s.p == 0);
  CHECK(s.q == 0);
}

TEST_CASE("irreducible components") {
  CHECK(irreducible_components(F("B,1,1")).size() == 1);
  const BasisId e = BasisId::eps_delta(1, 1);
  CHECK(irreducible_components(pure(e, {R(e, "e1"), R(e, "2d1")})).size() == 2);
  CHECK(irreducible_components(pure(e, {})).empty());
}

TEST_CASE("find_base and highest_root examples") {
  const BasisId e3 = BasisId::eps_delta(3, 0);
  const auto a2 = pure(e3, {R(e3, "e1-e2"), R(e3, "e2-e3"), R(e3, "e1-e3")});
  auto base = find_base(a2);
  std::set<Root> bs(base.begin(), base.end());
  CHECK(bs == std::set<Root>{R(e3, "e1-e2"), R(e3, "e2-e3")});
  auto hr = highest_root(a2, base);
  CHECK(hr.theta == R(e3, "e1-e3"));
  CHECK(hr.coeffs == std::vector<std::int64_t>{1, 1});

  const BasisId d2 = BasisId::eps_delta(0, 2);
  const auto b2 = pure(d2, {R(d2, "d1+d2"), R(d2, "d1-d2"), R(d2, "d1"), R(d2, "d2")});
  base = find_base(b2);
  CHECK(base == std::vector<Root>{R(d2, "d1-d2"), R(d2, "d2")});
  hr = highest_root(b2, base);
  CHECK(hr.theta == R(d2, "d1+d2"));
  CHECK(hr.coeffs == std::vector<std::int64_t>{1, 2});

  const auto a1 = pure(e3, {R(e3, "e1")});
  CHECK(find_base(a1) == std::vector<Root>{R(e3, "e1")});
}

TEST_CASE("find_base and highest_root agree with exhaustive search") {
  std::vector<std::pair<FiniteRootSet, std::size_t>> comps;
  for (const char* t : {"F4", "G3", "D,2,2", "B,2,1", "A,3,0", "D21L", "C,3"}) {
    const auto s = F(t);
    std::vector<Root> even{Root(s.basis())};
    for (const auto& r : s.roots())
      if (finite_parity(s.type(), r) == Parity::Even) even.push_back(r);
    FiniteTypeId pt;
    pt.pure_label = "even";
    for (const auto& c : irreducible_components(FiniteRootSet(pt, s.form(), even))) {
      std::vector<Vec> rows;
      for (const auto& r : c.roots()) rows.push_back(r.coords);
      comps.emplace_back(c, rank_of(rows));
    }
  }
  std::set<std::string> labels;
  for (auto& [c, rank] : comps) {
    labels.insert(cartan_label(c));
    check_base_against_oracle(c, rank);
  }
  CHECK(labels.count("B3") == 1);
  CHECK(labels.count("G2") == 1);
  CHECK(labels.count("A1") == 1);
}

TEST_CASE("affine membership") {
  const auto b = make_system(parse_affine_type("B,1,1"));
  const BasisId e = b->basis();
  CHECK(b->contains(R(e, "e1-3δ")));
  CHECK(b->contains(R(e, "2δ")));
  CHECK_FALSE(b->contains(R(e, "2e1")));
  const auto a = make_system(parse_affine_type("A,1,1"));
  const BasisId ea = a->basis();
  CHECK_FALSE(a->contains(a->canonicalize(R(ea, "e1-d1"))));
  CHECK(a->contains(a->canonicalize(R(ea, "e1-d1+σ"))));
  CHECK(a->contains(a->canonicalize(R(ea, "d1-e1-σ+4δ"))));
  // Projected, d1-e1 equals e2-d2, so both signs of σ occur.
  CHECK(a->sigma_values(a->canonicalize(R(ea, "d1-e1"))) == std::set<std::int64_t>{-1, 1});
  const auto a2 = make_system(parse_affine_type("A,2,2"));
  CHECK_FALSE(a2->contains(a2->canonicalize(R(a2->basis(), "d1-e1+σ"))));
  CHECK(a2->contains(a2->canonicalize(R(a2->basis(), "d1-e1-σ"))));
  CHECK(a->contains(a->canonicalize(R(ea, "e1-e2"))));
  CHECK_THROWS_AS(parse_affine_type("B,1,0"), RankError);
  CHECK_THROWS_AS(parse_affine_type("s,2"), UnknownType);
}

TEST_CASE("classify and parity") {
  const auto b = make_system(parse_affine_type("B,1,1"));
  const BasisId e = b->basis();
  CHECK(classify(*b, R(e, "d1+2δ")) == RootKind::Real);
  CHECK(classify(*b, R(e, "e1+d1")) == RootKind::Nonsingular);
  CHECK(classify(*b, R(e, "-5δ")) == RootKind::Imaginary);
  CHECK(classify(*b, Root(e)) == RootKind::Zero);
  CHECK_THROWS_AS(classify(*b, R(e, "2e1")), NotARoot);
  CHECK(parity(*b, R(e, "d1")) == Parity::Odd);
  CHECK(parity(*b, R(e, "2d1+5δ")) == Parity::Even);

  const auto d = make_system(parse_affine_type("D21L"));
  CHECK(classify(*d, R(d->basis(), "g1+g2+g3+3δ")) == RootKind::Nonsingular);
  CHECK(classify(*d, R(d->basis(), "2g2")) == RootKind::Real);
  const auto g = make_system(parse_affine_type("G3"));
  CHECK(parity(*g, R(g->basis(), "nu")) == Parity::Odd);
  CHECK(parity(*g, R(g->basis(), "2nu-7δ")) == Parity::Even);
}

TEST_CASE("reflections") {
  const auto d = make_system(parse_affine_type("D21L"));
  const BasisId g = d->basis();
  CHECK(reflect(*d, R(g, "2g1"), R(g, "g1+g2+g3")) == R(g, "-g1+g2+g3"));
  CHECK(reflect(*d, R(g, "2g1+δ"), R(g, "2g1+δ")) == R(g, "-2g1-δ"));
  CHECK_THROWS_AS(reflect(*d, R(g, "g1+g2+g3"), R(g, "2g1")), IsotropicReflectionError);
  const auto b = make_system(parse_affine_type("B,1,1"));
  CHECK(reflect(*b, R(b->basis(), "e1"), R(b->basis(), "d1")) == R(b->basis(), "d1"));
  // r_{e1+δ}(e1-δ) = e1-δ - 2(e1+δ)
  CHECK(reflect(*b, R(b->basis(), "e1+δ"), R(b->basis(), "e1-δ")) == R(b->basis(), "-e1-3δ"));
}

TEST_CASE("window partition: real and nonsingular roots are exactly R minus Zδ") {
  for (const char* t : {"A,2,1", "A,1,1", "B,1,1", "C,2", "D,2,1", "D21L", "F4", "G3"}) {
    const auto s = make_system(parse_affine_type(t));
    for (const auto& r : s->window(3)) {
      const RootKind k = classify(*s, r);
      if (r.finite_is_zero()) CHECK((k == RootKind::Imaginary || k == RootKind::Zero));
      else CHECK((k == RootKind::Real || k == RootKind::Nonsingular));
    }
  }
}
