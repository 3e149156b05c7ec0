#include "superroots/rational.hpp"

#include "superroots/errors.hpp"

#include <charconv>

namespace superroots {

std::string to_string(const Rational& q) {
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

std::string to_display(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return to_string(q);
}

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    throw ParseError("not a rational: '" + std::string(whole) + "'");
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  const auto num = parse_int(text.substr(0, slash), text);
  const auto den = parse_int(text.substr(slash + 1), text);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::int64_t floor_of(const Rational& q) {
  auto n = q.numerator();
  auto d = q.denominator();  // always positive
  auto f = n / d;
  if (n % d != 0 && n < 0) --f;
  return f;
}

std::int64_t ceil_of(const Rational& q) { return -floor_of(-q); }

}  // namespace superroots
