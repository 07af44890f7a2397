#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cliffroots {

using Rational = mpq_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

// num/den in lowest terms (the two-argument mpq_class constructor does not reduce).
inline Rational ratio(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Canonical text form: "3", "-1/2".
std::string to_string(const Rational& x);

// Accepts "a" or "a/b" with optional sign; throws ParseError.
Rational parse_rational(std::string_view text);

double to_double(const Rational& x);

}  // namespace cliffroots
