#include "superroots/root.hpp"

#include "superroots/errors.hpp"

#include <cctype>

namespace superroots {

int BasisId::dim() const {
  switch (kind) {
    case BasisKind::EpsDelta: return m + n;
    case BasisKind::Gamma: return 3;
    case BasisKind::F4: return 4;
    case BasisKind::G3: return 4;
  }
  return 0;
}

std::string BasisId::symbol(int i) const {
  switch (kind) {
    case BasisKind::EpsDelta:
      return i < m ? "e" + std::to_string(i + 1) : "d" + std::to_string(i - m + 1);
    case BasisKind::Gamma: return "g" + std::to_string(i + 1);
    case BasisKind::F4: return i == 0 ? "e" : "d" + std::to_string(i);
    case BasisKind::G3: return i == 3 ? "nu" : "e" + std::to_string(i + 1);
  }
  return "?";
}

int BasisId::symbol_index(std::string_view name) const {
  for (int i = 0; i < dim(); ++i)
    if (symbol(i) == name) return i;
  return -1;
}

Root::Root(BasisId b, std::vector<Rational> c, std::int64_t k_, std::int64_t s)
    : basis(b), coords(std::move(c)), k(k_), sigma(s) {
  if (static_cast<int>(coords.size()) != b.dim())
    throw BasisMismatch("coordinate vector has wrong length");
}

Root Root::unit(BasisId b, int i, Rational c) {
  Root r(b);
  r.coords.at(static_cast<std::size_t>(i)) = c;
  return r;
}

Root Root::delta(BasisId b, std::int64_t k) {
  Root r(b);
  r.k = k;
  return r;
}

bool Root::finite_is_zero() const {
  for (const auto& c : coords)
    if (c != 0) return false;
  return sigma == 0;
}

bool Root::is_zero() const { return k == 0 && finite_is_zero(); }

Root Root::direction() const {
  Root r = *this;
  r.k = 0;
  return r;
}

Root Root::shifted(std::int64_t dk) const {
  Root r = *this;
  r.k += dk;
  return r;
}

Root Root::operator-() const {
  Root r = *this;
  for (auto& c : r.coords) c = -c;
  r.k = -r.k;
  r.sigma = -r.sigma;
  return r;
}

Root& Root::operator+=(const Root& o) {
  if (basis != o.basis) throw BasisMismatch(to_string() + " + " + o.to_string());
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
  k += o.k;
  sigma += o.sigma;
  return *this;
}

Root& Root::operator-=(const Root& o) { return *this += -o; }

Root operator*(std::int64_t c, Root a) {
  for (auto& x : a.coords) x *= c;
  a.k *= c;
  a.sigma *= c;
  return a;
}

bool operator==(const Root& a, const Root& b) {
  return a.basis == b.basis && a.k == b.k && a.sigma == b.sigma && a.coords == b.coords;
}

bool operator<(const Root& a, const Root& b) {
  for (std::size_t i = 0; i < a.coords.size() && i < b.coords.size(); ++i) {
    if (a.coords[i] != b.coords[i]) return a.coords[i] < b.coords[i];
  }
  if (a.coords.size() != b.coords.size()) return a.coords.size() < b.coords.size();
  if (a.sigma != b.sigma) return a.sigma < b.sigma;
  return a.k < b.k;
}

namespace {

void append_term(std::string& out, const Rational& c, const std::string& sym) {
  if (c == 0) return;
  if (c < 0) out += "-";
  else if (!out.empty()) out += "+";
  const Rational a = c < 0 ? -c : c;
  if (a != 1) out += to_display(a);
  out += sym;
}

}  // namespace

std::string Root::to_string() const {
  std::string out;
  for (int i = 0; i < basis.dim(); ++i) append_term(out, coords[static_cast<std::size_t>(i)], basis.symbol(i));
  append_term(out, Rational(sigma), "σ");
  append_term(out, Rational(k), "δ");
  return out.empty() ? "0" : out;
}

Root parse_root(BasisId basis, std::string_view text) {
  Root r(basis);
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw ParseError("cannot parse root '" + std::string(text) + "': " + why);
  };
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (text.substr(i) == "0") return r;
  bool first = true;
  while (true) {
    skip_ws();
    if (i >= text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (!first) {
      fail("expected + or -");
    }
    first = false;
    std::size_t start = i;
    while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/')) ++i;
    Rational coef = 1;
    if (i > start) coef = parse_rational(text.substr(start, i - start));
    if (i < text.size() && text[i] == '*') ++i;
    start = i;
    while (i < text.size() && text[i] != '+' && text[i] != '-' &&
           !std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    const std::string sym(text.substr(start, i - start));
    coef *= sign;
    if (sym.empty()) fail("missing symbol");
    if (sym == "delta" || sym == "δ") {
      if (!is_integer(coef)) fail("non-integer δ multiplicity");
      r.k += coef.numerator();
    } else if (sym == "sigma" || sym == "σ") {
      if (!is_integer(coef)) fail("non-integer σ multiplicity");
      r.sigma += coef.numerator();
    } else {
      const int idx = basis.symbol_index(sym);
      if (idx < 0) fail("unknown symbol '" + sym + "'");
      r.coords[static_cast<std::size_t>(idx)] += coef;
    }
  }
  if (first) fail("empty");
  return r;
}

std::vector<Rational> flatten(const Root& r) {
  std::vector<Rational> v = r.coords;
  v.emplace_back(r.sigma);
  v.emplace_back(r.k);
  return v;
}

}  // namespace superroots
