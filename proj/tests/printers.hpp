#pragma once

#include "superroots/root.hpp"

#include <doctest.h>

#include <set>
#include <vector>

namespace doctest {

template <>
struct StringMaker<superroots::Root> {
  static String convert(const superroots::Root& r) { return r.to_string().c_str(); }
};

template <>
struct StringMaker<std::vector<superroots::Root>> {
  static String convert(const std::vector<superroots::Root>& v) {
    std::string s = "{";
    for (const auto& r : v) s += (s.size() > 1 ? ", " : "") + r.to_string();
    return (s + "}").c_str();
  }
};

template <>
struct StringMaker<std::set<superroots::Root>> {
  static String convert(const std::set<superroots::Root>& v) {
    return StringMaker<std::vector<superroots::Root>>::convert({v.begin(), v.end()});
  }
};

}  // namespace doctest
