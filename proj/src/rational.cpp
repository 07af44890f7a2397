#include "cliffroots/rational.hpp"

#include <cctype>

#include "cliffroots/errors.hpp"
#include "cliffroots/gaussian.hpp"

namespace cliffroots {

std::string to_string(const Rational& x) { return x.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto valid = [](const std::string& part, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) ++i;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    return true;
  };
  const auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid(num, true) || !valid(den, false)) throw ParseError("invalid rational: '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0) throw ParseError("zero denominator: '" + s + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

double to_double(const Rational& x) { return x.get_d(); }

std::string to_string(const GaussRational& z) {
  if (is_zero(z.im)) return to_string(z.re);
  std::string im;
  if (z.im == 1) {
    im = "i";
  } else if (z.im == -1) {
    im = "-i";
  } else {
    im = to_string(z.im) + "*i";
  }
  if (is_zero(z.re)) return im;
  if (im[0] == '-') return to_string(z.re) + im;
  return to_string(z.re) + "+" + im;
}

}  // namespace cliffroots
