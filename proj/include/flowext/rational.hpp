#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "flowext/errors.hpp"

namespace flowext {

// Exact rational arithmetic backed by GMP. Every projection column, objective
// and profile value goes through this type.
using Rational = mpq_class;
using BigCount = mpz_class;

// Parses "p/q", "p" or "-p/q". The result is canonicalized.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto not_space = [](char ch) { return ch != ' ' && ch != '\t'; };
  while (!s.empty() && !not_space(s.back())) s.pop_back();
  std::size_t first = 0;
  while (first < s.size() && !not_space(s[first])) ++first;
  s.erase(0, first);
  if (s.empty()) throw InputError("empty rational literal");
  Rational value;
  if (value.set_str(s, 10) != 0) {
    throw InputError("malformed rational literal '" + s + "'");
  }
  if (value.get_den() == 0) {
    throw InputError("zero denominator in rational literal '" + s + "'");
  }
  value.canonicalize();
  return value;
}

inline std::string to_string(const Rational& value) {
  // mpq_class::get_str prints integers without a "/1" suffix.
  return value.get_str();
}

inline Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) sum += a[i] * b[i];
  }
  return sum;
}

}  // namespace flowext
